// Compares the OpenMP kernels against their serial reference
// implementations on representative workloads.

#include <benchmark/benchmark.h>

#include "mmo/core.hpp"
#include "mmo/diversity.hpp"
#include "mmo/indicators.hpp"

namespace {

mmo::PointSet random_points(std::size_t n, std::size_t dim, std::uint64_t seed) {
    mmo::RandomStream rng(seed);
    mmo::PointSet out(n, std::vector<double>(dim));
    for (auto& p : out)
        for (auto& v : p) v = rng.uniform(-10.0, 10.0);
    return out;
}

mmo::Population random_population(std::size_t n, std::uint64_t seed) {
    mmo::RandomStream rng(seed);
    mmo::Population pop;
    pop.members.resize(n);
    for (auto& ind : pop.members) {
        ind.decision = {rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)};
        ind.objectives = {rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0)};
    }
    return pop;
}

void bm_igd_plus_serial(benchmark::State& state) {
    const auto sols = random_points(100, 2, 1);
    const auto refs = random_points(static_cast<std::size_t>(state.range(0)), 2, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(mmo::serial::igd_plus(sols, refs));
}

void bm_igd_plus_parallel(benchmark::State& state) {
    const auto sols = random_points(100, 2, 1);
    const auto refs = random_points(static_cast<std::size_t>(state.range(0)), 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mmo::igd_plus(sols, refs));
}

void bm_igdx_serial(benchmark::State& state) {
    const auto sols = random_points(100, 2, 1);
    const auto refs = random_points(static_cast<std::size_t>(state.range(0)), 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mmo::serial::igdx(sols, refs));
}

void bm_igdx_parallel(benchmark::State& state) {
    const auto sols = random_points(100, 2, 1);
    const auto refs = random_points(static_cast<std::size_t>(state.range(0)), 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mmo::igdx(sols, refs));
}

void bm_niched_diversity_serial(benchmark::State& state) {
    const auto pop = random_population(static_cast<std::size_t>(state.range(0)), 3);
    const mmo::NicheConfig niche{10};
    for (auto _ : state)
        benchmark::DoNotOptimize(mmo::serial::niched_diversity(
            pop, mmo::DiversityKind::crowding_distance, niche));
}

void bm_niched_diversity_parallel(benchmark::State& state) {
    const auto pop = random_population(static_cast<std::size_t>(state.range(0)), 3);
    const mmo::NicheConfig niche{10};
    for (auto _ : state)
        benchmark::DoNotOptimize(mmo::niched_diversity(
            pop, mmo::DiversityKind::crowding_distance, niche));
}

}  // namespace

BENCHMARK(bm_igd_plus_serial)->Arg(1000)->Arg(10000);
BENCHMARK(bm_igd_plus_parallel)->Arg(1000)->Arg(10000);
BENCHMARK(bm_igdx_serial)->Arg(1000)->Arg(10000);
BENCHMARK(bm_igdx_parallel)->Arg(1000)->Arg(10000);
BENCHMARK(bm_niched_diversity_serial)->Arg(100)->Arg(400);
BENCHMARK(bm_niched_diversity_parallel)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
