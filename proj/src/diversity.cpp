#include "mmo/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mmo {

std::vector<double> crowding_distance(const Population& pop) {
    const std::size_t n = pop.size();
    if (n == 0) throw std::domain_error("crowding_distance: empty population");
    for (const auto& ind : pop.members)
        if (!ind.evaluated())
            throw std::logic_error("crowding_distance: unevaluated individual");

    std::vector<double> dist(n, 0.0);
    if (n <= 2) return std::vector<double>(n, kInf);

    const std::size_t m_count = pop[0].objectives.size();
    std::vector<std::size_t> order(n);
    for (std::size_t m = 0; m < m_count; ++m) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double fa = pop[a].objectives[m], fb = pop[b].objectives[m];
            return fa < fb || (fa == fb && a < b);
        });
        dist[order.front()] = kInf;
        dist[order.back()] = kInf;
        for (std::size_t p = 1; p + 1 < n; ++p) {
            const std::size_t i = order[p];
            if (dist[i] == kInf) continue;
            dist[i] += pop[order[p + 1]].objectives[m] - pop[order[p - 1]].objectives[m];
        }
    }
    for (double& d : dist)
        if (d != kInf) d /= static_cast<double>(m_count);
    return dist;
}

std::vector<double> spea2_sigma_k(const Population& pop, std::size_t k) {
    const std::size_t n = pop.size();
    if (k < 1 || k > n - 1 || n < 2)
        throw std::domain_error("spea2_sigma_k: k out of range");
    std::vector<double> sigma(n);
    std::vector<double> row(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                row[w++] = squared_distance(pop[i].objectives, pop[j].objectives);
        std::nth_element(row.begin(), row.begin() + (k - 1), row.end());
        sigma[i] = std::sqrt(row[k - 1]);
    }
    return sigma;
}

std::vector<double> spea2_density(const std::vector<double>& sigma_k) {
    std::vector<double> out(sigma_k.size());
    for (std::size_t i = 0; i < sigma_k.size(); ++i) {
        if (sigma_k[i] < 0.0)
            throw std::domain_error("spea2_density: negative sigma");
        out[i] = 1.0 / (sigma_k[i] + 2.0);
    }
    return out;
}

std::size_t spea2_default_k(std::size_t n) {
    if (n < 2) return 1;
    auto k = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    return std::clamp<std::size_t>(k, 1, n - 1);
}

std::vector<std::size_t> decision_space_knn(const Population& pop,
                                            std::size_t i, std::size_t k) {
    const std::size_t n = pop.size();
    if (k < 1 || n < 2 || k > n - 1)
        throw std::domain_error("decision_space_knn: k out of range");
    std::vector<std::pair<double, std::size_t>> cand;
    cand.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
        if (j != i)
            cand.emplace_back(squared_distance(pop[i].decision, pop[j].decision), j);
    std::nth_element(cand.begin(), cand.begin() + (k - 1), cand.end());
    std::sort(cand.begin(), cand.begin() + k);
    std::vector<std::size_t> out(k);
    for (std::size_t j = 0; j < k; ++j) out[j] = cand[j].second;
    return out;
}

double niched_value(const Population& pop, DiversityKind kind,
                    std::size_t i, std::size_t k) {
    auto neighbors = decision_space_knn(pop, i, k);
    neighbors.push_back(i);
    std::sort(neighbors.begin(), neighbors.end());  // keep original order

    Population sub;
    sub.members.reserve(neighbors.size());
    std::size_t pos_of_i = 0;
    for (std::size_t p = 0; p < neighbors.size(); ++p) {
        if (neighbors[p] == i) pos_of_i = p;
        sub.members.push_back(pop[neighbors[p]]);
    }

    switch (kind) {
        case DiversityKind::crowding_distance:
            return crowding_distance(sub)[pos_of_i];
        case DiversityKind::spea2_density: {
            const std::size_t inner_k =
                std::clamp<std::size_t>(spea2_default_k(k + 1), 1, k);
            std::vector<double> sq;
            sq.reserve(k);
            for (std::size_t p = 0; p < sub.size(); ++p)
                if (p != pos_of_i)
                    sq.push_back(squared_distance(sub[pos_of_i].objectives,
                                                  sub[p].objectives));
            std::nth_element(sq.begin(), sq.begin() + (inner_k - 1), sq.end());
            return 1.0 / (std::sqrt(sq[inner_k - 1]) + 2.0);
        }
    }
    throw std::logic_error("niched_value: unknown estimator");
}

std::vector<double> niched_diversity(const Population& pop, DiversityKind kind,
                                     const NicheConfig& niche) {
    const std::size_t n = pop.size();
    if (niche.k < 1 || n < 2 || niche.k > n - 1)
        throw std::domain_error("niched_diversity: invalid niche size");
    std::vector<double> out(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        out[static_cast<std::size_t>(i)] =
            niched_value(pop, kind, static_cast<std::size_t>(i), niche.k);
    return out;
}

namespace serial {

std::vector<double> niched_diversity(const Population& pop, DiversityKind kind,
                                     const NicheConfig& niche) {
    const std::size_t n = pop.size();
    if (niche.k < 1 || n < 2 || niche.k > n - 1)
        throw std::domain_error("niched_diversity: invalid niche size");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = niched_value(pop, kind, i, niche.k);
    return out;
}

}  // namespace serial

}  // namespace mmo
