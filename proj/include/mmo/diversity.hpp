#ifndef MMO_DIVERSITY_HPP
#define MMO_DIVERSITY_HPP

#include <vector>

#include "mmo/core.hpp"

namespace mmo {

/// The two diversity estimators used by NSGA-II and SPEA2.
/// crowding_distance: larger is better. spea2_density: smaller is better.
enum class DiversityKind { crowding_distance, spea2_density };

/// Niche definition: the k closest solutions in decision space
/// (Euclidean, raw variable scale).
struct NicheConfig {
    std::size_t k = 1;
};

/// NSGA-II crowding distance of every member: boundary solutions in any
/// objective get +inf, interior ones the average gap between their sorted
/// neighbors per objective. No normalization.
std::vector<double> crowding_distance(const Population& pop);

/// Objective-space distance from each member to its k-th nearest other
/// member (1-indexed, self excluded).
std::vector<double> spea2_sigma_k(const Population& pop, std::size_t k);

/// SPEA2 density 1/(sigma_k + 2), entry-wise; range (0, 0.5].
std::vector<double> spea2_density(const std::vector<double>& sigma_k);

/// Default SPEA2 neighbor order: floor(sqrt(n)) clamped to [1, n-1].
std::size_t spea2_default_k(std::size_t n);

/// Indices of the k decision-space nearest neighbors of member i,
/// ties broken by smaller index.
std::vector<std::size_t> decision_space_knn(const Population& pop,
                                            std::size_t i, std::size_t k);

/// Niched diversity of a single member: the estimator evaluated inside
/// the sub-population {i} + decision_space_knn(pop, i, k).
double niched_value(const Population& pop, DiversityKind kind,
                    std::size_t i, std::size_t k);

/// Niched diversity of every member. Parallel over members; results are
/// independent of the thread count.
std::vector<double> niched_diversity(const Population& pop, DiversityKind kind,
                                     const NicheConfig& niche);

namespace serial {
/// Reference single-threaded version of niched_diversity.
std::vector<double> niched_diversity(const Population& pop, DiversityKind kind,
                                     const NicheConfig& niche);
}  // namespace serial

}  // namespace mmo

#endif
