#include "mmo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmo {

std::pair<double, double> mean_std(const std::vector<double>& values) {
    if (values.size() < 2)
        throw std::domain_error("mean_std: need at least 2 values");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Small samples take the exact route: the conditional permutation
// distribution of the first sample's rank sum, enumerated by dynamic
// programming over doubled ranks (integers even under midranks).
constexpr std::size_t kExactLimit = 40;

double exact_p_value(const std::vector<long>& rank2, std::size_t n1,
                     long observed) {
    long total_sum = 0;
    for (long r : rank2) total_sum += r;
    // count[c * (total_sum + 1) + s] = subsets of size c with doubled sum s
    const std::size_t width = static_cast<std::size_t>(total_sum) + 1;
    std::vector<double> count((n1 + 1) * width, 0.0);
    count[0] = 1.0;
    std::size_t seen = 0;
    for (long r : rank2) {
        ++seen;
        const std::size_t top = std::min(seen, n1);
        for (std::size_t c = top; c >= 1; --c) {
            double* row = count.data() + c * width;
            const double* prev = count.data() + (c - 1) * width;
            for (long s = total_sum; s >= r; --s) row[s] += prev[s - r];
        }
    }
    const double* dist = count.data() + n1 * width;
    double below = 0.0, above = 0.0, everything = 0.0;
    for (long s = 0; s <= total_sum; ++s) {
        everything += dist[s];
        if (s <= observed) below += dist[s];
        if (s >= observed) above += dist[s];
    }
    return std::min(1.0, 2.0 * std::min(below, above) / everything);
}

}  // namespace

ComparisonVerdict wilcoxon_rank_sum(const std::vector<double>& a,
                                    const std::vector<double>& b) {
    if (a.size() < 10 || b.size() < 10)
        throw std::domain_error("wilcoxon_rank_sum: samples too small");
    const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;

    std::vector<std::pair<double, int>> all;  // (value, sample id)
    all.reserve(n);
    for (double v : a) all.emplace_back(v, 0);
    for (double v : b) all.emplace_back(v, 1);
    std::sort(all.begin(), all.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    // Average ranks within tie groups; accumulate the tie correction term.
    // Doubled ranks stay integral even for midranks, which the exact path
    // relies on.
    double rank_sum_a = 0.0;
    double tie_term = 0.0;
    std::vector<long> rank2(n, 0);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && all[j].first == all[i].first) ++j;
        const double group = static_cast<double>(j - i);
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t p = i; p < j; ++p) {
            rank2[p] = static_cast<long>(i + 1 + j);
            if (all[p].second == 0) rank_sum_a += avg_rank;
        }
        tie_term += group * group * group - group;
        i = j;
    }

    const double dn = static_cast<double>(n);
    const double mu = static_cast<double>(n1) * (dn + 1.0) / 2.0;

    double p_value = 1.0;
    if (n <= kExactLimit) {
        long observed = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (all[i].second == 0) observed += rank2[i];
        p_value = exact_p_value(rank2, n1, observed);
    } else {
        const double var = static_cast<double>(n1) * static_cast<double>(n2) /
                           12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
        if (var > 0.0) {
            const double diff = rank_sum_a - mu;
            const double cc = diff > 0.0 ? -0.5 : (diff < 0.0 ? 0.5 : 0.0);
            const double z = (diff + cc) / std::sqrt(var);
            p_value = std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
        }
    }

    ComparisonVerdict verdict;
    verdict.p_value = p_value;
    if (p_value >= kSignificanceLevel) {
        verdict.symbol = Symbol::approx;
    } else {
        const double ma = median(a), mb = median(b);
        if (ma != mb)
            verdict.symbol = ma < mb ? Symbol::plus : Symbol::minus;
        else
            verdict.symbol = rank_sum_a < mu ? Symbol::plus : Symbol::minus;
    }
    return verdict;
}

}  // namespace mmo
