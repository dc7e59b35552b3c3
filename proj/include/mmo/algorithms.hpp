#ifndef MMO_ALGORITHMS_HPP
#define MMO_ALGORITHMS_HPP

#include <functional>
#include <optional>
#include <string>

#include "mmo/core.hpp"
#include "mmo/diversity.hpp"
#include "mmo/problems.hpp"

namespace mmo {

enum class AlgorithmName { nsga2, spea2, niching_nsga2, niching_spea2 };

AlgorithmName algorithm_from_string(const std::string& name);
std::string to_string(AlgorithmName name);
const std::vector<std::string>& algorithm_names();

struct VariationConfig {
    double crossover_probability = 1.0;
    double crossover_distribution_index = 20.0;
    double mutation_probability = -1.0;  // < 0 selects the default 1/D
    double mutation_distribution_index = 5.0;
};

struct AlgorithmConfig {
    AlgorithmName name = AlgorithmName::nsga2;
    std::size_t population_size = 100;
    std::size_t max_evaluations = 50000;
    std::size_t niche_k = 0;  // 0 = auto = floor(sqrt(population_size))
    VariationConfig variation;
};

/// Niche size policy; diversity estimation on a set S uses effective_k(|S|).
/// k = 0 means auto = floor(sqrt(population_size)). Niches are drawn from
/// the whole set entering selection. An explicit k >= population_size - 1
/// requests a niche spanning the entire population, which disables the
/// restriction; selection then takes the baseline code path exactly, so the
/// niching variants degenerate to the plain algorithms bit for bit.
struct NicheSpec {
    std::size_t k = 0;
    std::size_t population_size = 0;

    bool whole_population() const { return k > 0 && k + 1 >= population_size; }

    std::size_t effective_k(std::size_t set_size) const {
        if (set_size < 2) return 0;
        const std::size_t base = k == 0 ? spea2_default_k(population_size) : k;
        return std::min(base, set_size - 1);
    }
};

struct AlgoRunResult {
    Population final_population;
    std::size_t evaluations_used = 0;
    std::uint64_t seed = 0;
};

/// Strict preference between two scored individuals; false both ways = tie.
using Preference =
    std::function<bool(const Individual&, const Individual&)>;

Preference nsga2_preference();
Preference spea2_preference();

/// Draws two distinct indices uniformly and returns the preferred one
/// (the first drawn on ties).
std::size_t binary_tournament(const Population& pop, RandomStream& rng,
                              const Preference& prefer);

/// Simulated binary crossover (bounded, per-variable exchange).
std::pair<Individual, Individual> sbx_crossover(const Individual& a,
                                                const Individual& b,
                                                const VariationConfig& cfg,
                                                const ProblemSpec& problem,
                                                RandomStream& rng);

/// Bounded polynomial mutation.
Individual polynomial_mutation(const Individual& x, const VariationConfig& cfg,
                               const ProblemSpec& problem, RandomStream& rng);

/// NSGA-II survivor selection: fill by fronts, truncate the partial front
/// by (niched) crowding distance computed within that front.
Population nsga2_environmental_selection(const Population& merged, std::size_t n,
                                         const std::optional<NicheSpec>& niche);

/// SPEA2 survivor selection (fitness = raw + density, then archive
/// truncation); with a niche both the density and the truncation distances
/// are restricted to decision-space neighbors.
Population spea2_environmental_selection(const Population& merged, std::size_t n,
                                         const std::optional<NicheSpec>& niche);

using GenerationObserver =
    std::function<void(std::size_t generation, const Population&)>;

AlgoRunResult run_algorithm(const ProblemSpec& problem, const AlgorithmConfig& cfg,
                            std::uint64_t seed,
                            const GenerationObserver& observer = nullptr);

}  // namespace mmo

#endif
