#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mmo/algorithms.hpp"
#include "mmo/dominance.hpp"
#include "mmo/diversity.hpp"
#include "oracles.hpp"

using namespace mmo;

namespace {

Population make_population(const std::vector<std::vector<double>>& decisions,
                           const std::vector<std::vector<double>>& objectives) {
    Population pop;
    for (std::size_t i = 0; i < decisions.size(); ++i) {
        Individual ind;
        ind.decision = decisions[i];
        ind.objectives = objectives[i];
        pop.members.push_back(ind);
    }
    return pop;
}

std::vector<std::vector<double>> decisions_of(const Population& pop) {
    std::vector<std::vector<double>> out;
    for (const auto& ind : pop.members) out.push_back(ind.decision);
    return out;
}

// Textbook SPEA2 environmental selection written from first principles,
// used as the reference for the plain (un-niched) variant.
Population textbook_spea2_selection(const Population& merged, std::size_t n) {
    const std::size_t total = merged.size();
    std::vector<std::vector<double>> obj;
    for (const auto& ind : merged.members) obj.push_back(ind.objectives);
    const auto raw = oracles::raw_fitness(obj);

    const std::size_t k = spea2_default_k(total);
    std::vector<double> fitness(total);
    for (std::size_t i = 0; i < total; ++i) {
        std::vector<double> row;
        for (std::size_t j = 0; j < total; ++j)
            if (j != i) row.push_back(oracles::distance(obj[i], obj[j]));
        std::sort(row.begin(), row.end());
        fitness[i] = raw[i] + 1.0 / (row[k - 1] + 2.0);
    }

    std::vector<std::size_t> archive, rest;
    for (std::size_t i = 0; i < total; ++i)
        (raw[i] == 0.0 ? archive : rest).push_back(i);

    if (archive.size() < n) {
        std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
            if (fitness[a] != fitness[b]) return fitness[a] < fitness[b];
            return a < b;
        });
        archive.insert(archive.end(), rest.begin(),
                       rest.begin() + (n - archive.size()));
        std::sort(archive.begin(), archive.end());
    } else {
        while (archive.size() > n) {
            // remove the member with the lexicographically smallest sorted
            // list of distances to the remaining members; ties keep the
            // first (lowest index) candidate
            std::size_t victim = 0;
            std::vector<double> best;
            for (std::size_t p = 0; p < archive.size(); ++p) {
                std::vector<double> row;
                for (std::size_t q = 0; q < archive.size(); ++q)
                    if (q != p)
                        row.push_back(oracles::distance(obj[archive[p]],
                                                        obj[archive[q]]));
                std::sort(row.begin(), row.end());
                if (p == 0 || std::lexicographical_compare(
                                  row.begin(), row.end(), best.begin(),
                                  best.end())) {
                    victim = p;
                    best = row;
                }
            }
            archive.erase(archive.begin() + victim);
        }
    }

    Population out;
    for (std::size_t i : archive) out.members.push_back(merged[i]);
    return out;
}

}  // namespace

TEST_CASE("algorithm names round-trip") {
    for (const auto& name : algorithm_names())
        CHECK(to_string(algorithm_from_string(name)) == name);
    CHECK(algorithm_names().size() == 4);
    CHECK_THROWS_AS(algorithm_from_string("hillclimber"), std::out_of_range);
}

TEST_CASE("binary tournament ordering") {
    Population pop;
    pop.members.resize(2);
    pop[0].rank = 0;
    pop[0].diversity = 1.0;
    pop[1].rank = 1;
    pop[1].diversity = 50.0;
    const auto prefer = nsga2_preference();

    SUBCASE("lower rank always wins") {
        RandomStream rng(1);
        for (int i = 0; i < 1000; ++i)
            CHECK(binary_tournament(pop, rng, prefer) == 0);
    }
    SUBCASE("equal ranks fall back to diversity, infinity on top") {
        pop[1].rank = 0;
        pop[1].diversity = kInf;
        pop[0].diversity = 2.0;
        RandomStream rng(2);
        for (int i = 0; i < 1000; ++i)
            CHECK(binary_tournament(pop, rng, prefer) == 1);
    }
    SUBCASE("identical keys split evenly between first draws") {
        pop[1].rank = 0;
        pop[1].diversity = 1.0;
        RandomStream rng(3);
        int wins0 = 0;
        for (int i = 0; i < 10000; ++i)
            if (binary_tournament(pop, rng, prefer) == 0) ++wins0;
        CHECK(wins0 > 4800);
        CHECK(wins0 < 5200);
    }
    SUBCASE("missing keys are an error") {
        Population raw;
        raw.members.resize(2);
        RandomStream rng(4);
        CHECK_THROWS_AS(binary_tournament(raw, rng, prefer), std::logic_error);
        Population tiny;
        tiny.members.resize(1);
        CHECK_THROWS_AS(binary_tournament(tiny, rng, prefer), std::domain_error);
    }
    SUBCASE("spea2 preference picks the lower fitness") {
        pop[0].fitness = 0.3;
        pop[1].fitness = 2.5;
        RandomStream rng(5);
        for (int i = 0; i < 1000; ++i)
            CHECK(binary_tournament(pop, rng, spea2_preference()) == 0);
    }
}

TEST_CASE("sbx crossover behavior") {
    ProblemSpec box;
    box.dim = 3;
    box.lower = {0, 0, 0};
    box.upper = {1, 1, 1};
    Individual a, b;
    a.decision = {0.2, 0.5, 0.8};
    b.decision = {0.6, 0.5, 0.1};
    VariationConfig cfg;

    SUBCASE("zero probability is a no-op") {
        cfg.crossover_probability = 0.0;
        RandomStream rng(7);
        const auto [c1, c2] = sbx_crossover(a, b, cfg, box, rng);
        CHECK(c1.decision == a.decision);
        CHECK(c2.decision == b.decision);
    }
    SUBCASE("identical parents are a fixed point") {
        RandomStream rng(11);
        const auto [c1, c2] = sbx_crossover(a, a, cfg, box, rng);
        CHECK(c1.decision == a.decision);
        CHECK(c2.decision == a.decision);
    }
    SUBCASE("children stay within bounds and center on the parent midpoint") {
        RandomStream rng(13);
        std::vector<double> sum(box.dim, 0.0);
        const int trials = 10000;
        for (int t = 0; t < trials; ++t) {
            const auto [c1, c2] = sbx_crossover(a, b, cfg, box, rng);
            for (std::size_t d = 0; d < box.dim; ++d) {
                for (const auto& c : {c1, c2}) {
                    CHECK(c.decision[d] >= box.lower[d]);
                    CHECK(c.decision[d] <= box.upper[d]);
                }
                sum[d] += c1.decision[d] + c2.decision[d];
            }
        }
        for (std::size_t d = 0; d < box.dim; ++d) {
            const double mid = 0.5 * (a.decision[d] + b.decision[d]);
            CHECK(sum[d] / (2.0 * trials) ==
                  doctest::Approx(mid).epsilon(0.02));
        }
    }
    SUBCASE("dimension mismatch is rejected") {
        Individual bad;
        bad.decision = {0.5};
        RandomStream rng(17);
        CHECK_THROWS_AS(sbx_crossover(a, bad, cfg, box, rng),
                        std::invalid_argument);
    }
}

TEST_CASE("polynomial mutation behavior") {
    ProblemSpec box;
    box.dim = 4;
    box.lower = {0, 0, 0, 0};
    box.upper = {1, 1, 1, 1};
    Individual x;
    x.decision = {0.0, 0.3, 0.7, 1.0};
    VariationConfig cfg;

    SUBCASE("zero probability is the identity") {
        cfg.mutation_probability = 0.0;
        RandomStream rng(19);
        CHECK(polynomial_mutation(x, cfg, box, rng).decision == x.decision);
    }
    SUBCASE("bounds are respected even at the boundary") {
        cfg.mutation_probability = 1.0;
        RandomStream rng(23);
        for (int t = 0; t < 10000; ++t) {
            const auto y = polynomial_mutation(x, cfg, box, rng);
            for (std::size_t d = 0; d < box.dim; ++d) {
                CHECK(y.decision[d] >= box.lower[d]);
                CHECK(y.decision[d] <= box.upper[d]);
            }
        }
    }
    SUBCASE("per-variable rate hits about D * p variables") {
        cfg.mutation_probability = 0.25;
        RandomStream rng(29);
        int mutated = 0;
        const int trials = 10000;
        Individual mid;
        mid.decision = {0.5, 0.5, 0.5, 0.5};
        for (int t = 0; t < trials; ++t) {
            const auto y = polynomial_mutation(mid, cfg, box, rng);
            for (std::size_t d = 0; d < box.dim; ++d)
                if (y.decision[d] != mid.decision[d]) ++mutated;
        }
        const double expected = 4.0 * 0.25 * trials;
        CHECK(mutated > expected * 0.95);
        CHECK(mutated < expected * 1.05);
    }
}

TEST_CASE("nsga2 environmental selection hand cases") {
    SUBCASE("a full first front passes through unchanged") {
        const auto pop = make_population(
            {{0.0}, {1.0}, {2.0}}, {{0, 2}, {1, 1}, {2, 0}});
        const auto out = nsga2_environmental_selection(pop, 3, std::nullopt);
        CHECK(decisions_of(out) == decisions_of(pop));
    }
    SUBCASE("plain crowding drops the near-duplicate") {
        const auto pop = make_population(
            {{0.0}, {1.0}, {2.0}, {3.0}},
            {{0, 2}, {1, 1}, {2, 0}, {1.01, 0.99}});
        const auto out = nsga2_environmental_selection(pop, 3, std::nullopt);
        REQUIRE(out.size() == 3);
        CHECK(decisions_of(out) ==
              std::vector<std::vector<double>>({{0.0}, {1.0}, {2.0}}));
    }
    SUBCASE("distant niches make everyone a boundary, index order decides") {
        // same objectives, but (1,1) and (1.01,0.99) live in distant
        // decision-space niches: with k = 1 every niche has two members,
        // all diversities are infinite and truncation keeps the first three
        const auto pop = make_population(
            {{0.0}, {0.1}, {100.0}, {100.1}},
            {{0, 2}, {1, 1}, {2, 0}, {1.01, 0.99}});
        const auto out =
            nsga2_environmental_selection(pop, 3, NicheSpec{1, 100});
        REQUIRE(out.size() == 3);
        CHECK(decisions_of(out) ==
              std::vector<std::vector<double>>({{0.0}, {0.1}, {100.0}}));
    }
    SUBCASE("undersized merged set is rejected") {
        const auto pop = make_population({{0.0}}, {{0, 0}});
        CHECK_THROWS_AS(nsga2_environmental_selection(pop, 2, std::nullopt),
                        std::domain_error);
    }
}

TEST_CASE("nsga2 selection keeps whole better fronts first") {
    RandomStream rng(31);
    for (int iter = 0; iter < 100; ++iter) {
        Population pop;
        for (int i = 0; i < 20; ++i) {
            Individual ind;
            ind.decision = {rng.uniform(-5, 5), rng.uniform(-5, 5)};
            ind.objectives = {rng.uniform(0, 4), rng.uniform(0, 4)};
            pop.members.push_back(ind);
        }
        const auto out = nsga2_environmental_selection(pop, 10, std::nullopt);
        REQUIRE(out.size() == 10);
        // survivors' worst rank never exceeds the rank that fills capacity
        Population scored = pop;
        non_dominated_sort(scored);
        std::map<int, std::size_t> per_front;
        for (const auto& ind : scored.members) ++per_front[*ind.rank];
        std::size_t running = 0;
        int cutoff = 0;
        for (const auto& [rank, count] : per_front) {
            running += count;
            cutoff = rank;
            if (running >= 10) break;
        }
        for (const auto& ind : out.members) CHECK(*ind.rank <= cutoff);
    }
}

TEST_CASE("spea2 environmental selection hand cases") {
    SUBCASE("a non-dominated set of exactly N is the identity") {
        const auto pop = make_population(
            {{0.0}, {1.0}, {2.0}}, {{0, 2}, {1, 1}, {2, 0}});
        const auto out = spea2_environmental_selection(pop, 3, std::nullopt);
        CHECK(decisions_of(out) == decisions_of(pop));
    }
    SUBCASE("coincident objective vectors are truncated first") {
        const auto pop = make_population(
            {{0.0}, {1.0}, {2.0}, {3.0}},
            {{0, 2}, {1, 1}, {1, 1}, {2, 0}});
        const auto out =
            spea2_environmental_selection(pop, 3, NicheSpec{2, 100});
        REQUIRE(out.size() == 3);
        // one of the two coincident members is gone
        std::size_t coincident = 0;
        for (const auto& ind : out.members)
            if (ind.objectives == std::vector<double>({1, 1})) ++coincident;
        CHECK(coincident == 1);
    }
    SUBCASE("undersized merged set is rejected") {
        const auto pop = make_population({{0.0}}, {{0, 0}});
        CHECK_THROWS_AS(spea2_environmental_selection(pop, 2, std::nullopt),
                        std::domain_error);
    }
}

TEST_CASE("plain spea2 selection matches a textbook re-implementation") {
    RandomStream rng(37);
    for (int iter = 0; iter < 100; ++iter) {
        Population pop;
        for (int i = 0; i < 20; ++i) {
            Individual ind;
            ind.decision = {rng.uniform(-5, 5), rng.uniform(-5, 5)};
            ind.objectives = {rng.uniform(0, 4), rng.uniform(0, 4)};
            pop.members.push_back(ind);
        }
        const auto got = spea2_environmental_selection(pop, 10, std::nullopt);
        const auto want = textbook_spea2_selection(pop, 10);
        REQUIRE(got.size() == want.size());
        CHECK(decisions_of(got) == decisions_of(want));
    }
}

TEST_CASE("run_algorithm contract") {
    const auto& prob = get_problem("mmf1");

    SUBCASE("budget equal to the population returns the initial population") {
        AlgorithmConfig cfg;
        cfg.population_size = 12;
        cfg.max_evaluations = 12;
        const auto res = run_algorithm(prob, cfg, 42);
        CHECK(res.evaluations_used == 12);
        CHECK(res.final_population.size() == 12);
        CHECK(res.seed == 42);
    }
    SUBCASE("same seed, same run") {
        AlgorithmConfig cfg;
        cfg.population_size = 16;
        cfg.max_evaluations = 400;
        for (const auto& name : algorithm_names()) {
            cfg.name = algorithm_from_string(name);
            const auto r1 = run_algorithm(prob, cfg, 9);
            const auto r2 = run_algorithm(prob, cfg, 9);
            CHECK(decisions_of(r1.final_population) ==
                  decisions_of(r2.final_population));
        }
    }
    SUBCASE("evaluation budget is consumed within one generation") {
        AlgorithmConfig cfg;
        cfg.population_size = 10;
        cfg.max_evaluations = 95;
        const auto res = run_algorithm(prob, cfg, 3);
        CHECK(res.evaluations_used >= 95);
        CHECK(res.evaluations_used <= 100);
    }
    SUBCASE("whole-population niche reproduces the baseline trajectory") {
        AlgorithmConfig base, nich;
        base.population_size = nich.population_size = 20;
        base.max_evaluations = nich.max_evaluations = 600;
        base.name = AlgorithmName::nsga2;
        nich.name = AlgorithmName::niching_nsga2;
        nich.niche_k = 19;
        std::vector<Population> hist_a, hist_b;
        run_algorithm(prob, base, 5,
                      [&](std::size_t, const Population& p) { hist_a.push_back(p); });
        run_algorithm(prob, nich, 5,
                      [&](std::size_t, const Population& p) { hist_b.push_back(p); });
        REQUIRE(hist_a.size() == hist_b.size());
        for (std::size_t g = 0; g < hist_a.size(); ++g)
            CHECK(decisions_of(hist_a[g]) == decisions_of(hist_b[g]));
    }
    SUBCASE("config validation") {
        AlgorithmConfig cfg;
        cfg.population_size = 3;
        CHECK_THROWS_AS(run_algorithm(prob, cfg, 1), std::invalid_argument);
        cfg.population_size = 10;
        cfg.max_evaluations = 5;
        CHECK_THROWS_AS(run_algorithm(prob, cfg, 1), std::invalid_argument);
    }
}
