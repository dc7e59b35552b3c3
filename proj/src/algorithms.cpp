#include "mmo/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mmo/dominance.hpp"

namespace mmo {

AlgorithmName algorithm_from_string(const std::string& name) {
    if (name == "nsga2") return AlgorithmName::nsga2;
    if (name == "spea2") return AlgorithmName::spea2;
    if (name == "niching_nsga2") return AlgorithmName::niching_nsga2;
    if (name == "niching_spea2") return AlgorithmName::niching_spea2;
    throw std::out_of_range("unknown algorithm '" + name + "'");
}

std::string to_string(AlgorithmName name) {
    switch (name) {
        case AlgorithmName::nsga2: return "nsga2";
        case AlgorithmName::spea2: return "spea2";
        case AlgorithmName::niching_nsga2: return "niching_nsga2";
        case AlgorithmName::niching_spea2: return "niching_spea2";
    }
    return "?";
}

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"nsga2", "niching_nsga2",
                                                   "spea2", "niching_spea2"};
    return names;
}

Preference nsga2_preference() {
    return [](const Individual& a, const Individual& b) {
        if (!a.rank || !b.rank || !a.diversity || !b.diversity)
            throw std::logic_error("nsga2_preference: missing rank or diversity");
        if (*a.rank != *b.rank) return *a.rank < *b.rank;
        return *a.diversity > *b.diversity;
    };
}

Preference spea2_preference() {
    return [](const Individual& a, const Individual& b) {
        if (!a.fitness || !b.fitness)
            throw std::logic_error("spea2_preference: missing fitness");
        return *a.fitness < *b.fitness;
    };
}

std::size_t binary_tournament(const Population& pop, RandomStream& rng,
                              const Preference& prefer) {
    const std::size_t n = pop.size();
    if (n < 2) throw std::domain_error("binary_tournament: population too small");
    const std::size_t i = rng.uniform_int(n);
    std::size_t j = rng.uniform_int(n - 1);
    if (j >= i) ++j;
    return prefer(pop[j], pop[i]) ? j : i;
}

std::pair<Individual, Individual> sbx_crossover(const Individual& a,
                                                const Individual& b,
                                                const VariationConfig& cfg,
                                                const ProblemSpec& problem,
                                                RandomStream& rng) {
    if (a.decision.size() != b.decision.size() ||
        a.decision.size() != problem.dim)
        throw std::invalid_argument("sbx_crossover: dimension mismatch");

    Individual c1, c2;
    c1.decision = a.decision;
    c2.decision = b.decision;
    if (rng.uniform01() > cfg.crossover_probability) return {c1, c2};

    const double eta = cfg.crossover_distribution_index;
    for (std::size_t d = 0; d < problem.dim; ++d) {
        if (rng.uniform01() > 0.5) continue;
        const double x1 = a.decision[d], x2 = b.decision[d];
        if (std::abs(x1 - x2) < 1e-14) continue;
        const double y1 = std::min(x1, x2), y2 = std::max(x1, x2);
        const double lb = problem.lower[d], ub = problem.upper[d];
        const double rand = rng.uniform01();

        auto spread = [&](double beta) {
            const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
            if (rand <= 1.0 / alpha)
                return std::pow(rand * alpha, 1.0 / (eta + 1.0));
            return std::pow(1.0 / (2.0 - rand * alpha), 1.0 / (eta + 1.0));
        };

        double beta_low = 1.0 + 2.0 * (y1 - lb) / (y2 - y1);
        double lo = 0.5 * ((y1 + y2) - spread(beta_low) * (y2 - y1));
        double beta_high = 1.0 + 2.0 * (ub - y2) / (y2 - y1);
        double hi = 0.5 * ((y1 + y2) + spread(beta_high) * (y2 - y1));
        lo = std::clamp(lo, lb, ub);
        hi = std::clamp(hi, lb, ub);
        if (rng.uniform01() <= 0.5) std::swap(lo, hi);
        c1.decision[d] = lo;
        c2.decision[d] = hi;
    }
    return {c1, c2};
}

Individual polynomial_mutation(const Individual& x, const VariationConfig& cfg,
                               const ProblemSpec& problem, RandomStream& rng) {
    if (x.decision.size() != problem.dim)
        throw std::invalid_argument("polynomial_mutation: dimension mismatch");
    const double pm = cfg.mutation_probability < 0.0
                          ? 1.0 / static_cast<double>(problem.dim)
                          : cfg.mutation_probability;
    const double eta = cfg.mutation_distribution_index;

    Individual out;
    out.decision = x.decision;
    for (std::size_t d = 0; d < problem.dim; ++d) {
        if (rng.uniform01() > pm) continue;
        const double lb = problem.lower[d], ub = problem.upper[d];
        const double span = ub - lb;
        if (span <= 0.0) continue;
        const double y = out.decision[d];
        const double rand = rng.uniform01();
        const double mut_pow = 1.0 / (eta + 1.0);
        double deltaq;
        if (rand < 0.5) {
            const double xy = 1.0 - (y - lb) / span;
            const double val =
                2.0 * rand + (1.0 - 2.0 * rand) * std::pow(xy, eta + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            const double xy = 1.0 - (ub - y) / span;
            const double val = 2.0 * (1.0 - rand) +
                               2.0 * (rand - 0.5) * std::pow(xy, eta + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        out.decision[d] = std::clamp(y + deltaq * span, lb, ub);
    }
    return out;
}

namespace {

Population gather(const Population& merged, const std::vector<std::size_t>& idx) {
    Population out;
    out.capacity = merged.capacity;
    out.members.reserve(idx.size());
    for (std::size_t i : idx) out.members.push_back(merged[i]);
    return out;
}

}  // namespace

Population nsga2_environmental_selection(const Population& merged, std::size_t n,
                                         const std::optional<NicheSpec>& niche) {
    if (merged.size() < n)
        throw std::domain_error("nsga2_environmental_selection: |merged| < N");

    Population work = merged;
    const FrontPartition partition = non_dominated_sort(work);

    // With active niching the diversity of every member is estimated against
    // its decision-space niche in the whole merged set; otherwise crowding is
    // computed front-wise as in the baseline.
    const bool niching = niche && !niche->whole_population();
    if (niching) {
        const std::size_t k = niche->effective_k(work.size());
        const std::vector<double> div =
            niched_diversity(work, DiversityKind::crowding_distance,
                             NicheConfig{k});
        for (std::size_t i = 0; i < work.size(); ++i) work[i].diversity = div[i];
    }

    std::vector<std::size_t> survivors;
    survivors.reserve(n);
    for (const auto& front : partition.fronts) {
        std::vector<double> div;
        if (niching) {
            div.reserve(front.size());
            for (std::size_t i : front) div.push_back(*work[i].diversity);
        } else {
            Population front_pop = gather(work, front);
            div = front.size() == 1 ? std::vector<double>{kInf}
                                    : crowding_distance(front_pop);
            for (std::size_t p = 0; p < front.size(); ++p)
                work[front[p]].diversity = div[p];
        }

        if (survivors.size() + front.size() <= n) {
            survivors.insert(survivors.end(), front.begin(), front.end());
            if (survivors.size() == n) break;
        } else {
            const std::size_t need = n - survivors.size();
            std::vector<std::size_t> order(front.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          const double da = div[a], db = div[b];
                          if (da != db) return da > db;
                          return front[a] < front[b];
                      });
            std::vector<std::size_t> keep(order.begin(), order.begin() + need);
            std::sort(keep.begin(), keep.end(),
                      [&](std::size_t a, std::size_t b) { return front[a] < front[b]; });
            for (std::size_t p : keep) survivors.push_back(front[p]);
            break;
        }
    }
    Population out = gather(work, survivors);
    out.capacity = n;
    return out;
}

Population spea2_environmental_selection(const Population& merged, std::size_t n,
                                         const std::optional<NicheSpec>& niche) {
    if (merged.size() < n)
        throw std::domain_error("spea2_environmental_selection: |merged| < N");

    Population work = merged;
    const std::size_t total = work.size();
    const std::vector<double> raw = spea2_strength_and_raw(work);

    const bool niching = niche && !niche->whole_population();

    std::vector<double> density;
    if (niching) {
        const std::size_t k = niche->effective_k(total);
        density = niched_diversity(work, DiversityKind::spea2_density,
                                   NicheConfig{k});
    } else {
        density = spea2_density(spea2_sigma_k(work, spea2_default_k(total)));
    }
    for (std::size_t i = 0; i < total; ++i) work[i].fitness = raw[i] + density[i];

    std::vector<std::size_t> archive;
    for (std::size_t i = 0; i < total; ++i)
        if (raw[i] == 0.0) archive.push_back(i);

    if (archive.size() < n) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < total; ++i)
            if (raw[i] != 0.0) rest.push_back(i);
        std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
            if (*work[a].fitness != *work[b].fitness)
                return *work[a].fitness < *work[b].fitness;
            return a < b;
        });
        const std::size_t need = n - archive.size();
        archive.insert(archive.end(), rest.begin(), rest.begin() + need);
        std::sort(archive.begin(), archive.end());
        return gather(work, archive);
    }

    if (archive.size() == n) return gather(work, archive);

    // Archive truncation: repeatedly remove the member whose ascending list
    // of objective-space distances to its niche is lexicographically
    // smallest. The niche shrinks as members are removed.
    const std::size_t m = archive.size();
    std::vector<char> alive(m, 1);
    std::size_t alive_count = m;

    std::vector<std::vector<std::pair<double, std::size_t>>> obj_rows(m);
    for (std::size_t p = 0; p < m; ++p) {
        obj_rows[p].reserve(m - 1);
        for (std::size_t q = 0; q < m; ++q)
            if (q != p)
                obj_rows[p].emplace_back(
                    euclidean_distance(work[archive[p]].objectives,
                                       work[archive[q]].objectives),
                    q);
        std::sort(obj_rows[p].begin(), obj_rows[p].end());
    }

    std::vector<std::vector<std::pair<double, std::size_t>>> dec_rows;
    std::vector<std::vector<double>> obj_dist;  // dense matrix, niched only
    if (niching) {
        dec_rows.resize(m);
        obj_dist.assign(m, std::vector<double>(m, 0.0));
        for (std::size_t p = 0; p < m; ++p) {
            dec_rows[p].reserve(m - 1);
            for (std::size_t q = 0; q < m; ++q) {
                if (q == p) continue;
                dec_rows[p].emplace_back(
                    squared_distance(work[archive[p]].decision,
                                     work[archive[q]].decision),
                    q);
                obj_dist[p][q] = euclidean_distance(work[archive[p]].objectives,
                                                    work[archive[q]].objectives);
            }
            // stable by (distance, index) for the documented tie rule
            std::sort(dec_rows[p].begin(), dec_rows[p].end(),
                      [](const auto& a, const auto& b) {
                          if (a.first != b.first) return a.first < b.first;
                          return a.second < b.second;
                      });
        }
    }

    std::vector<double> list_a, list_b;
    auto build_niched_list = [&](std::size_t p, std::size_t k,
                                 std::vector<double>& out) {
        out.clear();
        for (const auto& [d2, q] : dec_rows[p]) {
            if (!alive[q]) continue;
            (void)d2;
            out.push_back(obj_dist[p][q]);
            if (out.size() == k) break;
        }
        std::sort(out.begin(), out.end());
    };

    // -1 / 0 / +1 lexicographic comparison of the current distance lists of
    // members p and q (plain variant: distances to all alive others).
    auto compare_plain = [&](std::size_t p, std::size_t q) {
        std::size_t ip = 0, iq = 0;
        while (true) {
            while (ip < obj_rows[p].size() && !alive[obj_rows[p][ip].second]) ++ip;
            while (iq < obj_rows[q].size() && !alive[obj_rows[q][iq].second]) ++iq;
            const bool ep = ip == obj_rows[p].size();
            const bool eq = iq == obj_rows[q].size();
            if (ep || eq) return 0;
            const double dp = obj_rows[p][ip].first, dq = obj_rows[q][iq].first;
            if (dp < dq) return -1;
            if (dp > dq) return 1;
            ++ip;
            ++iq;
        }
    };

    while (alive_count > n) {
        std::size_t victim = m;
        if (niching) {
            const std::size_t k = niche->effective_k(alive_count);
            bool have = false;
            for (std::size_t p = 0; p < m; ++p) {
                if (!alive[p]) continue;
                build_niched_list(p, k, list_b);
                if (!have || std::lexicographical_compare(
                                 list_b.begin(), list_b.end(),
                                 list_a.begin(), list_a.end())) {
                    victim = p;
                    list_a = list_b;
                    have = true;
                }
            }
        } else {
            for (std::size_t p = 0; p < m; ++p) {
                if (!alive[p]) continue;
                if (victim == m || compare_plain(p, victim) < 0) victim = p;
            }
        }
        alive[victim] = 0;
        --alive_count;
    }

    std::vector<std::size_t> survivors;
    survivors.reserve(n);
    for (std::size_t p = 0; p < m; ++p)
        if (alive[p]) survivors.push_back(archive[p]);
    Population out = gather(work, survivors);
    out.capacity = n;
    return out;
}

AlgoRunResult run_algorithm(const ProblemSpec& problem, const AlgorithmConfig& cfg,
                            std::uint64_t seed, const GenerationObserver& observer) {
    if (cfg.population_size < 4)
        throw std::invalid_argument("run_algorithm: population_size must be >= 4");
    if (cfg.max_evaluations < cfg.population_size)
        throw std::invalid_argument("run_algorithm: budget below population size");

    const bool is_spea2 = cfg.name == AlgorithmName::spea2 ||
                          cfg.name == AlgorithmName::niching_spea2;
    const bool is_niching = cfg.name == AlgorithmName::niching_nsga2 ||
                            cfg.name == AlgorithmName::niching_spea2;

    std::optional<NicheSpec> niche;
    if (is_niching) niche = NicheSpec{cfg.niche_k, cfg.population_size};

    RandomStream rng(seed);
    const std::size_t n = cfg.population_size;

    std::size_t evaluations = 0;
    auto evaluate = [&](Individual& ind) {
        ind.objectives = problem.evaluate(ind.decision);
        ++evaluations;
    };

    Population pop;
    pop.capacity = n;
    pop.members.resize(n);
    for (auto& ind : pop.members) {
        ind.decision.resize(problem.dim);
        for (std::size_t d = 0; d < problem.dim; ++d)
            ind.decision[d] = rng.uniform(problem.lower[d], problem.upper[d]);
        evaluate(ind);
    }

    auto select = [&](const Population& merged) {
        return is_spea2 ? spea2_environmental_selection(merged, n, niche)
                        : nsga2_environmental_selection(merged, n, niche);
    };
    const Preference prefer = is_spea2 ? spea2_preference() : nsga2_preference();

    pop = select(pop);
    std::size_t generation = 0;
    if (observer) observer(generation, pop);

    while (evaluations < cfg.max_evaluations) {
        Population merged = pop;
        merged.members.reserve(2 * n);
        for (std::size_t produced = 0; produced < n;) {
            const std::size_t p1 = binary_tournament(pop, rng, prefer);
            const std::size_t p2 = binary_tournament(pop, rng, prefer);
            auto [c1, c2] = sbx_crossover(pop[p1], pop[p2], cfg.variation,
                                          problem, rng);
            for (Individual* child : {&c1, &c2}) {
                if (produced == n) break;
                Individual ind =
                    polynomial_mutation(*child, cfg.variation, problem, rng);
                evaluate(ind);
                merged.members.push_back(std::move(ind));
                ++produced;
            }
        }
        pop = select(merged);
        ++generation;
        if (observer) observer(generation, pop);
    }

    return {std::move(pop), evaluations, seed};
}

}  // namespace mmo
