#ifndef MMO_PROBLEMS_HPP
#define MMO_PROBLEMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "mmo/core.hpp"

namespace mmo {

/// One equivalent Pareto subset, parameterized by t in [t_lo, t_hi].
struct SubsetCurve {
    double t_lo = 0.0;
    double t_hi = 1.0;
    std::function<std::vector<double>(double)> point;  // t -> decision vector
};

/// A benchmark multi-modal multi-objective problem: box bounds, a pure
/// objective evaluator, and the analytic Pareto-set parameterization
/// split into its equivalent subsets.
struct ProblemSpec {
    std::string name;
    std::size_t dim = 0;         // D
    std::size_t objectives = 0;  // M
    std::vector<double> lower, upper;
    std::function<std::vector<double>(const std::vector<double>&)> evaluate;
    std::vector<SubsetCurve> subsets;

    std::size_t equivalent_subset_count() const { return subsets.size(); }

    /// n reference points in decision space, distributed evenly across the
    /// equivalent subsets and uniformly along each parameterization.
    std::vector<std::vector<double>> pareto_set_sample(std::size_t n) const;

    /// Objective images of pareto_set_sample(n).
    std::vector<std::vector<double>> pareto_front_sample(std::size_t n) const;

    /// Decision-space reference points of one subset (n points).
    std::vector<std::vector<double>> subset_sample(std::size_t subset,
                                                   std::size_t n) const;
};

/// Registry lookup; throws std::out_of_range for unknown names.
const ProblemSpec& get_problem(const std::string& name);

/// All registry names in canonical order.
const std::vector<std::string>& problem_names();

}  // namespace mmo

#endif
