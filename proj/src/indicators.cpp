#include "mmo/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmo {

namespace {

void check_sets(const PointSet& solutions, const PointSet& reference,
                const char* who) {
    if (solutions.empty() || reference.empty())
        throw std::domain_error(std::string(who) + ": empty point set");
    if (solutions[0].size() != reference[0].size())
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

double igd_plus_term(const std::vector<double>& r, const PointSet& solutions) {
    double best = kInf;
    for (const auto& a : solutions) {
        double s = 0.0;
        for (std::size_t m = 0; m < r.size(); ++m) {
            const double d = std::max(a[m] - r[m], 0.0);
            s += d * d;
        }
        best = std::min(best, s);
    }
    return std::sqrt(best);
}

double igdx_term(const std::vector<double>& r, const PointSet& solutions) {
    double best = kInf;
    for (const auto& a : solutions) best = std::min(best, squared_distance(a, r));
    return std::sqrt(best);
}

// Per-reference terms are computed in parallel into a slot array and summed
// in index order, so the result does not depend on the thread count.
template <typename Term>
double mean_over_reference(const PointSet& solutions, const PointSet& reference,
                           Term term) {
    std::vector<double> slot(reference.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(reference.size()); ++i)
        slot[static_cast<std::size_t>(i)] =
            term(reference[static_cast<std::size_t>(i)], solutions);
    double sum = 0.0;
    for (double v : slot) sum += v;
    return sum / static_cast<double>(reference.size());
}

}  // namespace

double igd_plus(const PointSet& solutions, const PointSet& reference) {
    check_sets(solutions, reference, "igd_plus");
    return mean_over_reference(solutions, reference, igd_plus_term);
}

double igdx(const PointSet& solutions, const PointSet& reference) {
    check_sets(solutions, reference, "igdx");
    return mean_over_reference(solutions, reference, igdx_term);
}

namespace serial {

double igd_plus(const PointSet& solutions, const PointSet& reference) {
    check_sets(solutions, reference, "igd_plus");
    double sum = 0.0;
    for (const auto& r : reference) sum += igd_plus_term(r, solutions);
    return sum / static_cast<double>(reference.size());
}

double igdx(const PointSet& solutions, const PointSet& reference) {
    check_sets(solutions, reference, "igdx");
    double sum = 0.0;
    for (const auto& r : reference) sum += igdx_term(r, solutions);
    return sum / static_cast<double>(reference.size());
}

}  // namespace serial

std::size_t equivalent_pairs(const Population& solutions, double delta) {
    if (delta <= 0.0) throw std::domain_error("equivalent_pairs: delta must be > 0");
    const double d2 = delta * delta;
    std::size_t count = 0;
    for (std::size_t i = 0; i < solutions.size(); ++i)
        for (std::size_t j = i + 1; j < solutions.size(); ++j)
            if (squared_distance(solutions[i].objectives,
                                 solutions[j].objectives) <= d2)
                ++count;
    return count;
}

std::size_t subset_coverage(const Population& solutions, const ProblemSpec& spec,
                            double radius, std::size_t points_per_subset) {
    std::size_t covered = 0;
    for (std::size_t s = 0; s < spec.equivalent_subset_count(); ++s) {
        const auto pts = spec.subset_sample(s, points_per_subset);
        double r = radius;
        if (r <= 0.0) {
            std::vector<double> lo = pts[0], hi = pts[0];
            for (const auto& p : pts)
                for (std::size_t d = 0; d < p.size(); ++d) {
                    lo[d] = std::min(lo[d], p[d]);
                    hi[d] = std::max(hi[d], p[d]);
                }
            r = 0.05 * euclidean_distance(hi, lo);
        }
        const double r2 = r * r;
        bool hit = false;
        for (const auto& ind : solutions.members) {
            for (const auto& p : pts) {
                if (squared_distance(ind.decision, p) <= r2) {
                    hit = true;
                    break;
                }
            }
            if (hit) break;
        }
        if (hit) ++covered;
    }
    return covered;
}

}  // namespace mmo
