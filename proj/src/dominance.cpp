#include "mmo/dominance.hpp"

#include <stdexcept>

namespace mmo {

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: dimension mismatch");
    bool strictly_better = false;
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (a[m] > b[m]) return false;
        if (a[m] < b[m]) strictly_better = true;
    }
    return strictly_better;
}

namespace {

void require_evaluated(const Population& pop, const char* who) {
    for (const auto& ind : pop.members)
        if (!ind.evaluated())
            throw std::logic_error(std::string(who) + ": unevaluated individual");
}

}  // namespace

FrontPartition non_dominated_sort(Population& pop) {
    require_evaluated(pop, "non_dominated_sort");
    const std::size_t n = pop.size();
    std::vector<int> domination_count(n, 0);
    std::vector<std::vector<std::size_t>> dominated_by(n);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(pop[i].objectives, pop[j].objectives)) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(pop[j].objectives, pop[i].objectives)) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    FrontPartition partition;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (domination_count[i] == 0) current.push_back(i);

    int rank = 0;
    while (!current.empty()) {
        for (std::size_t i : current) pop[i].rank = rank;
        std::vector<std::size_t> next;
        for (std::size_t i : current)
            for (std::size_t j : dominated_by[i])
                if (--domination_count[j] == 0) next.push_back(j);
        partition.fronts.push_back(std::move(current));
        current = std::move(next);
        ++rank;
    }
    return partition;
}

std::vector<double> spea2_strength_and_raw(const Population& pop) {
    require_evaluated(pop, "spea2_strength_and_raw");
    const std::size_t n = pop.size();
    std::vector<double> strength(n, 0.0), raw(n, 0.0);
    std::vector<std::vector<std::size_t>> dominators(n);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(pop[i].objectives, pop[j].objectives)) {
                strength[i] += 1.0;
                dominators[j].push_back(i);
            } else if (dominates(pop[j].objectives, pop[i].objectives)) {
                strength[j] += 1.0;
                dominators[i].push_back(j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : dominators[i]) raw[i] += strength[j];
    return raw;
}

}  // namespace mmo
