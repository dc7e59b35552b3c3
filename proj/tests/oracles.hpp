// Independent brute-force oracles used to validate the library
// implementations. These are deliberately naive re-implementations and
// must not share code with the paths they check.
#ifndef MMO_TESTS_ORACLES_HPP
#define MMO_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "mmo/core.hpp"

namespace oracles {

inline bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
    bool better = false;
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (a[m] > b[m]) return false;
        if (a[m] < b[m]) better = true;
    }
    return better;
}

// Repeated peeling: front 0 = points no one dominates, remove, repeat.
inline std::vector<std::vector<std::size_t>> peel_fronts(
    const std::vector<std::vector<double>>& objectives) {
    std::vector<std::size_t> remaining(objectives.size());
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> fronts;
    while (!remaining.empty()) {
        std::vector<std::size_t> front, rest;
        for (std::size_t i : remaining) {
            bool dominated = false;
            for (std::size_t j : remaining)
                if (j != i && dominates(objectives[j], objectives[i])) {
                    dominated = true;
                    break;
                }
            (dominated ? rest : front).push_back(i);
        }
        fronts.push_back(front);
        remaining = rest;
    }
    return fronts;
}

// Double-loop SPEA2 raw fitness from first principles.
inline std::vector<double> raw_fitness(
    const std::vector<std::vector<double>>& objectives) {
    const std::size_t n = objectives.size();
    std::vector<double> strength(n, 0.0), raw(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && dominates(objectives[i], objectives[j])) strength[i] += 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && dominates(objectives[j], objectives[i])) raw[i] += strength[j];
    return raw;
}

inline double distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

inline double igdx(const std::vector<std::vector<double>>& solutions,
                   const std::vector<std::vector<double>>& reference) {
    double total = 0.0;
    for (const auto& r : reference) {
        double best = mmo::kInf;
        for (const auto& a : solutions) best = std::min(best, distance(a, r));
        total += best;
    }
    return total / static_cast<double>(reference.size());
}

inline double igd_plus(const std::vector<std::vector<double>>& solutions,
                       const std::vector<std::vector<double>>& reference) {
    double total = 0.0;
    for (const auto& r : reference) {
        double best = mmo::kInf;
        for (const auto& a : solutions) {
            double s = 0.0;
            for (std::size_t m = 0; m < r.size(); ++m) {
                const double d = std::max(a[m] - r[m], 0.0);
                s += d * d;
            }
            best = std::min(best, std::sqrt(s));
        }
        total += best;
    }
    return total / static_cast<double>(reference.size());
}

// Exact two-sided rank-sum p-value: the permutation distribution of the
// first sample's rank sum, conditional on the observed (possibly tied)
// values, via dynamic programming over doubled ranks.
inline double exact_wilcoxon_p(const std::vector<double>& a,
                               const std::vector<double>& b) {
    const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
    std::vector<double> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return all[i] < all[j]; });

    // doubled average ranks are integers
    std::vector<long> rank2(n, 0);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && all[order[j]] == all[order[i]]) ++j;
        const long r2 = static_cast<long>(i + 1 + j);  // 2 * average rank
        for (std::size_t p = i; p < j; ++p) rank2[order[p]] = r2;
        i = j;
    }

    long w_obs = 0;
    for (std::size_t i = 0; i < n1; ++i) w_obs += rank2[i];

    long max_sum = 0;
    for (long r : rank2) max_sum += r;
    // dp[c][s] = number of c-subsets with doubled rank sum s
    std::vector<std::vector<double>> dp(n1 + 1,
                                        std::vector<double>(max_sum + 1, 0.0));
    dp[0][0] = 1.0;
    for (std::size_t item = 0; item < n; ++item) {
        const long r = rank2[item];
        for (std::size_t c = std::min(item + 1, n1); c >= 1; --c)
            for (long s = max_sum; s >= r; --s)
                if (dp[c - 1][s - r] > 0.0) dp[c][s] += dp[c - 1][s - r];
    }
    double total = 0.0, le = 0.0, ge = 0.0;
    for (long s = 0; s <= max_sum; ++s) {
        const double cnt = dp[n1][s];
        total += cnt;
        if (s <= w_obs) le += cnt;
        if (s >= w_obs) ge += cnt;
    }
    (void)n2;
    return std::min(1.0, 2.0 * std::min(le, ge) / total);
}

}  // namespace oracles

#endif
