#ifndef MMO_DOMINANCE_HPP
#define MMO_DOMINANCE_HPP

#include <span>
#include <vector>

#include "mmo/core.hpp"

namespace mmo {

/// Disjoint fronts covering all population indices; front 0 is the
/// non-dominated set, front i+1 the non-dominated set of the remainder.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;
};

/// Pareto dominance under the minimization convention: a dominates b iff
/// a is no worse in every objective and strictly better in at least one.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Fast non-dominated sort (domination counts + dominated lists).
/// Also writes rank = front index into each individual.
FrontPartition non_dominated_sort(Population& pop);

/// SPEA2 raw fitness: R(i) = sum of strengths of all individuals that
/// dominate i, where strength S(j) = |{ k : j dominates k }|.
std::vector<double> spea2_strength_and_raw(const Population& pop);

}  // namespace mmo

#endif
