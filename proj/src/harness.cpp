#include "mmo/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "mmo/dominance.hpp"
#include "mmo/indicators.hpp"
#include "mmo/problems.hpp"

namespace mmo {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string g17(double v) { return fmt("%.17g", v); }

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void write_point_csv(const PointSet& points, const std::string& prefix,
                     const std::filesystem::path& path) {
    auto out = open_out(path);
    for (std::size_t d = 0; d < points.at(0).size(); ++d)
        out << (d ? "," : "") << prefix << (d + 1);
    out << "\n";
    for (const auto& p : points) {
        for (std::size_t d = 0; d < p.size(); ++d)
            out << (d ? "," : "") << g17(p[d]);
        out << "\n";
    }
}

std::string baseline_of(const std::string& algorithm) {
    if (algorithm == "niching_nsga2") return "nsga2";
    if (algorithm == "niching_spea2") return "spea2";
    return {};
}

}  // namespace

const char* to_symbol(Symbol s) {
    switch (s) {
        case Symbol::plus: return "+";
        case Symbol::minus: return "-";
        case Symbol::approx: return "≈";
    }
    return "?";
}

ComparisonTable run_experiment(const ExperimentConfig& cfg,
                               std::vector<RunRecord>* records_out) {
    if (cfg.runs < 1) throw std::invalid_argument("run_experiment: runs must be >= 1");
    const auto problems =
        cfg.problems.empty() ? problem_names() : cfg.problems;
    const auto algorithms =
        cfg.algorithms.empty() ? algorithm_names() : cfg.algorithms;

    struct ProblemRefs {
        const ProblemSpec* spec;
        PointSet set_points, front_points;
    };
    std::vector<ProblemRefs> refs;
    for (const auto& name : problems) {
        const ProblemSpec& spec = get_problem(name);  // validates the name
        refs.push_back({&spec, spec.pareto_set_sample(cfg.reference_set_size),
                        spec.pareto_front_sample(cfg.reference_set_size)});
    }
    for (const auto& name : algorithms) algorithm_from_string(name);

    std::vector<RunRecord> records(problems.size() * algorithms.size() * cfg.runs);
    struct Task {
        std::size_t problem, algorithm, run;
    };
    std::vector<Task> tasks;
    tasks.reserve(records.size());
    for (std::size_t p = 0; p < problems.size(); ++p)
        for (std::size_t a = 0; a < algorithms.size(); ++a)
            for (std::size_t r = 0; r < cfg.runs; ++r) tasks.push_back({p, a, r});

    const int jobs = cfg.parallelism == 0 ? omp_get_max_threads()
                                          : static_cast<int>(cfg.parallelism);

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long long t = 0; t < static_cast<long long>(tasks.size()); ++t) {
        const Task& task = tasks[static_cast<std::size_t>(t)];
        const auto& ref = refs[task.problem];

        AlgorithmConfig acfg;
        acfg.name = algorithm_from_string(algorithms[task.algorithm]);
        acfg.population_size = cfg.population_size;
        acfg.max_evaluations = cfg.max_evaluations;

        // Seeds depend only on the run index, so runs of different
        // algorithms on the same problem are seed-paired.
        const std::uint64_t seed = cfg.base_seed + task.run;
        AlgoRunResult run = run_algorithm(*ref.spec, acfg, seed);

        PointSet decisions, objectives;
        decisions.reserve(run.final_population.size());
        objectives.reserve(run.final_population.size());
        for (const auto& ind : run.final_population.members) {
            decisions.push_back(ind.decision);
            objectives.push_back(ind.objectives);
        }

        RunRecord rec;
        rec.problem = problems[task.problem];
        rec.algorithm = algorithms[task.algorithm];
        rec.run_index = task.run;
        rec.seed = seed;
        rec.igdx = igdx(decisions, ref.set_points);
        rec.igd_plus = igd_plus(objectives, ref.front_points);
        rec.evaluations_used = run.evaluations_used;
        rec.final_population = std::move(run.final_population);
        records[static_cast<std::size_t>(t)] = std::move(rec);
    }

    // Stats need at least two runs per cell; a 1-run matrix still produces
    // the CSV artifacts.
    ComparisonTable table;
    if (cfg.runs >= 2) {
        table = render_tables(records);
    } else {
        for (const auto& p : problems) table.problems.push_back(p);
        for (const auto& a : algorithms) table.algorithms.push_back(a);
    }

    if (!cfg.output_directory.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cfg.output_directory, ec);
        if (ec) throw IoError("cannot create '" + cfg.output_directory.string() + "'");
        write_results_csv(records, cfg.output_directory / "results.csv");
        if (cfg.runs >= 2) open_out(cfg.output_directory / "tables.md") << table.rendered;
        if (cfg.dump_populations) {
            const auto pop_dir = cfg.output_directory / "populations";
            std::filesystem::create_directories(pop_dir, ec);
            if (ec) throw IoError("cannot create '" + pop_dir.string() + "'");
            for (const auto& rec : records)
                dump_population(rec, pop_dir / (rec.problem + "__" + rec.algorithm +
                                                "__run" + std::to_string(rec.run_index) +
                                                ".csv"));
        }
    }

    if (records_out) *records_out = std::move(records);
    return table;
}

ComparisonTable render_tables(const std::vector<RunRecord>& records) {
    ComparisonTable table;
    auto remember = [](std::vector<std::string>& seq, const std::string& v) {
        if (std::find(seq.begin(), seq.end(), v) == seq.end()) seq.push_back(v);
    };
    std::map<std::pair<std::string, std::string>,
             std::pair<std::vector<double>, std::vector<double>>>
        samples;  // cell -> (igdx values, igd+ values)
    for (const auto& rec : records) {
        remember(table.problems, rec.problem);
        remember(table.algorithms, rec.algorithm);
        auto& cell = samples[{rec.problem, rec.algorithm}];
        cell.first.push_back(rec.igdx);
        cell.second.push_back(rec.igd_plus);
    }

    std::string missing;
    std::size_t runs = 0;
    for (const auto& p : table.problems) {
        for (const auto& a : table.algorithms) {
            auto it = samples.find({p, a});
            if (it == samples.end() || it->second.first.size() < 2)
                missing += " (" + p + ", " + a + ")";
            else
                runs = std::max(runs, it->second.first.size());
        }
    }
    if (!missing.empty())
        throw IncompleteDataError("incomplete results; missing cells:" + missing);

    for (const auto& [key, vals] : samples) {
        CellStats cs;
        std::tie(cs.igdx_mean, cs.igdx_std) = mean_std(vals.first);
        std::tie(cs.igdp_mean, cs.igdp_std) = mean_std(vals.second);
        table.cells[key] = cs;
    }

    const bool with_tests = runs >= 10;
    for (const auto& p : table.problems) {
        for (const auto& a : table.algorithms) {
            const std::string base = baseline_of(a);
            if (base.empty() || !with_tests) continue;
            if (std::find(table.algorithms.begin(), table.algorithms.end(), base) ==
                table.algorithms.end())
                continue;
            PairVerdict v;
            v.problem = p;
            v.baseline = base;
            v.variant = a;
            v.igdx = wilcoxon_rank_sum(samples[{p, a}].first,
                                       samples[{p, base}].first);
            v.igd_plus = wilcoxon_rank_sum(samples[{p, a}].second,
                                           samples[{p, base}].second);
            table.igdx_tally[a][static_cast<int>(v.igdx.symbol)]++;
            table.igdp_tally[a][static_cast<int>(v.igd_plus.symbol)]++;
            table.verdicts.push_back(std::move(v));
        }
    }

    auto find_verdict = [&](const std::string& p,
                            const std::string& a) -> const PairVerdict* {
        for (const auto& v : table.verdicts)
            if (v.problem == p && v.variant == a) return &v;
        return nullptr;
    };

    std::ostringstream out;
    for (int which = 0; which < 2; ++which) {
        const bool is_igdx = which == 0;
        out << (is_igdx ? "# IGDX (mean ± std, 31-run cells unless configured "
                          "otherwise)\n"
                        : "# IGD+ (mean ± std)\n");
        out << "| problem |";
        for (const auto& a : table.algorithms) out << " " << a << " |";
        out << "\n|---|";
        for (std::size_t i = 0; i < table.algorithms.size(); ++i) out << "---|";
        out << "\n";
        for (const auto& p : table.problems) {
            out << "| " << p << " |";
            for (const auto& a : table.algorithms) {
                const CellStats& cs = table.cells[{p, a}];
                const double mean = is_igdx ? cs.igdx_mean : cs.igdp_mean;
                const double sd = is_igdx ? cs.igdx_std : cs.igdp_std;
                // emphasize the better (smaller mean) side of a pair
                bool best = false;
                const std::string other =
                    baseline_of(a).empty()
                        ? (a == "nsga2" ? "niching_nsga2"
                                        : (a == "spea2" ? "niching_spea2" : ""))
                        : baseline_of(a);
                if (!other.empty() && table.cells.count({p, other})) {
                    const CellStats& oc = table.cells[{p, other}];
                    best = mean <= (is_igdx ? oc.igdx_mean : oc.igdp_mean);
                }
                std::string cell = fmt("%.4f", mean) + " ± " + fmt("%.4f", sd);
                if (best) cell = "**" + cell + "**";
                if (const PairVerdict* v = find_verdict(p, a))
                    cell += std::string(" ") +
                            to_symbol(is_igdx ? v->igdx.symbol : v->igd_plus.symbol);
                out << " " << cell << " |";
            }
            out << "\n";
        }
        if (!table.verdicts.empty()) {
            out << "| +/-/≈ |";
            for (const auto& a : table.algorithms) {
                const auto& tally = is_igdx ? table.igdx_tally : table.igdp_tally;
                auto it = tally.find(a);
                if (it == tally.end()) {
                    out << " baseline |";
                } else {
                    out << " " << it->second[0] << "/" << it->second[1] << "/"
                        << it->second[2] << " |";
                }
            }
            out << "\n";
        }
        out << "\n";
    }
    table.rendered = out.str();
    return table;
}

void dump_population(const RunRecord& record, const std::filesystem::path& path) {
    if (record.final_population.size() == 0 ||
        !record.final_population[0].evaluated())
        throw std::logic_error("dump_population: population not evaluated");
    Population pop = record.final_population;
    const FrontPartition fronts = non_dominated_sort(pop);

    auto out = open_out(path);
    const std::size_t dim = pop[0].decision.size();
    const std::size_t m = pop[0].objectives.size();
    for (std::size_t d = 0; d < dim; ++d) out << (d ? "," : "") << "x" << (d + 1);
    for (std::size_t f = 0; f < m; ++f) out << ",f" << (f + 1);
    out << "\n";
    std::vector<std::size_t> front0 = fronts.fronts.at(0);
    std::sort(front0.begin(), front0.end());
    for (std::size_t i : front0) {
        for (std::size_t d = 0; d < dim; ++d)
            out << (d ? "," : "") << g17(pop[i].decision[d]);
        for (std::size_t f = 0; f < m; ++f) out << "," << g17(pop[i].objectives[f]);
        out << "\n";
    }
}

void write_results_csv(const std::vector<RunRecord>& records,
                       const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "problem,algorithm,run,seed,igdx,igd_plus,evaluations\n";
    for (const auto& rec : records) {
        out << rec.problem << "," << rec.algorithm << "," << rec.run_index << ","
            << rec.seed << "," << g17(rec.igdx) << "," << g17(rec.igd_plus) << ","
            << rec.evaluations_used << "\n";
    }
}

std::vector<RunRecord> read_results_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::string line;
    if (!std::getline(in, line) ||
        line != "problem,algorithm,run,seed,igdx,igd_plus,evaluations")
        throw IoError("'" + path.string() + "' is not a results CSV");
    std::vector<RunRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        RunRecord rec;
        std::string field;
        std::getline(row, rec.problem, ',');
        std::getline(row, rec.algorithm, ',');
        std::getline(row, field, ',');
        rec.run_index = std::stoul(field);
        std::getline(row, field, ',');
        rec.seed = std::stoull(field);
        std::getline(row, field, ',');
        rec.igdx = std::stod(field);
        std::getline(row, field, ',');
        rec.igd_plus = std::stod(field);
        std::getline(row, field, ',');
        rec.evaluations_used = std::stoul(field);
        records.push_back(std::move(rec));
    }
    return records;
}

void dump_reference_sets(const std::string& problem, std::size_t n,
                         const std::filesystem::path& directory) {
    const ProblemSpec& spec = get_problem(problem);
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) throw IoError("cannot create '" + directory.string() + "'");
    write_point_csv(spec.pareto_set_sample(n), "x",
                    directory / (problem + "_pareto_set.csv"));
    write_point_csv(spec.pareto_front_sample(n), "f",
                    directory / (problem + "_pareto_front.csv"));
}

std::size_t median_run_index(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::domain_error("median_run_index: no records");
    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (records[a].igd_plus != records[b].igd_plus)
            return records[a].igd_plus < records[b].igd_plus;
        return records[a].run_index < records[b].run_index;
    });
    return records[order[(order.size() - 1) / 2]].run_index;
}

}  // namespace mmo
