#ifndef MMO_CORE_HPP
#define MMO_CORE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mmo {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// One candidate solution: a decision vector, its objective image (once
/// evaluated) and the bookkeeping scores used during selection.
struct Individual {
    std::vector<double> decision;
    std::vector<double> objectives;          // empty until evaluated
    std::optional<int> rank;                 // non-dominated sorting front index
    std::optional<double> diversity;         // crowding distance; may be +inf
    std::optional<double> fitness;           // SPEA2 fitness R + D

    bool evaluated() const { return !objectives.empty(); }

    void clear_scores() {
        rank.reset();
        diversity.reset();
        fitness.reset();
    }
};

/// Ordered set of individuals with a survivor capacity.
struct Population {
    std::vector<Individual> members;
    std::size_t capacity = 0;

    std::size_t size() const { return members.size(); }
    Individual& operator[](std::size_t i) { return members[i]; }
    const Individual& operator[](std::size_t i) const { return members[i]; }
};

/// Deterministic 64-bit random stream (xoshiro256++, state seeded through
/// splitmix64). The sequence depends only on the seed, never on the
/// platform or standard library.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, bound).
    std::uint64_t uniform_int(std::uint64_t bound);

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
};

std::vector<double> clamp_to_bounds(std::span<const double> decision,
                                    std::span<const double> lower,
                                    std::span<const double> upper);

double euclidean_distance(std::span<const double> a, std::span<const double> b);

double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace mmo

#endif
