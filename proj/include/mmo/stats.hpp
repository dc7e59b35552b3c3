#ifndef MMO_STATS_HPP
#define MMO_STATS_HPP

#include <utility>
#include <vector>

namespace mmo {

enum class Symbol { plus, minus, approx };

/// Outcome of a two-sided rank-sum comparison. `plus` means the first
/// sample is significantly better (smaller values), `minus` the opposite,
/// `approx` no significant difference at alpha = 0.05.
struct ComparisonVerdict {
    Symbol symbol = Symbol::approx;
    double p_value = 1.0;
};

constexpr double kSignificanceLevel = 0.05;

/// Arithmetic mean and sample standard deviation (n-1 denominator).
std::pair<double, double> mean_std(const std::vector<double>& values);

/// Two-sided Wilcoxon rank-sum test with average ranks for ties. Small
/// samples (combined size <= 40) are evaluated exactly by enumerating the
/// conditional permutation distribution; larger ones use the normal
/// approximation with tie-corrected variance and continuity correction.
/// Requires at least 10 observations per sample.
ComparisonVerdict wilcoxon_rank_sum(const std::vector<double>& a,
                                    const std::vector<double>& b);

}  // namespace mmo

#endif
