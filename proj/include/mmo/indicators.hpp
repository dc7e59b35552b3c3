#ifndef MMO_INDICATORS_HPP
#define MMO_INDICATORS_HPP

#include <vector>

#include "mmo/core.hpp"
#include "mmo/problems.hpp"

namespace mmo {

using PointSet = std::vector<std::vector<double>>;

/// IGD+ (minimization): mean over reference points of the minimal
/// dominance-clamped distance sqrt(sum(max(a_m - r_m, 0)^2)) to the
/// solution set. Parallel over reference points.
double igd_plus(const PointSet& solutions, const PointSet& reference);

/// IGDX: mean over decision-space reference points of the minimal
/// Euclidean distance to the solution set. Parallel over reference points.
double igdx(const PointSet& solutions, const PointSet& reference);

namespace serial {
/// Reference single-threaded double-loop implementations.
double igd_plus(const PointSet& solutions, const PointSet& reference);
double igdx(const PointSet& solutions, const PointSet& reference);
}  // namespace serial

/// Number of unordered pairs whose objective vectors are within Euclidean
/// distance delta of each other (the equivalent-solution diagnostic).
std::size_t equivalent_pairs(const Population& solutions, double delta);

/// Number of equivalent Pareto subsets having at least one solution within
/// `radius` (decision space) of one of the subset's reference points.
/// radius <= 0 selects the default: 5% of the subset bounding-box diagonal.
std::size_t subset_coverage(const Population& solutions, const ProblemSpec& spec,
                            double radius = 0.0,
                            std::size_t points_per_subset = 100);

}  // namespace mmo

#endif
