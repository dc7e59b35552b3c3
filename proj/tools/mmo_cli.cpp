// Benchmark harness CLI for multi-modal multi-objective optimization
// experiments: runs NSGA-II / SPEA2 and their niching variants on the
// built-in problem suite and reports IGDX / IGD+ comparison tables.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "mmo/harness.hpp"
#include "mmo/problems.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;
constexpr int kExitIncompleteData = 4;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    for (char c : csv) {
        if (c == ',') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-modal multi-objective optimization benchmark harness"};
    app.require_subcommand(1);

    std::string problems_csv, algorithms_csv, out_dir;
    std::size_t runs = 31, pop = 100, evals = 50000, refsize = 10000, jobs = 0;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd, bool with_matrix) {
        cmd->set_config("--config", "", "declarative config file (key = value)");
        cmd->add_option("--problems", problems_csv,
                        "comma-separated problem names (default: all)");
        if (with_matrix)
            cmd->add_option("--algorithms", algorithms_csv,
                            "comma-separated algorithm names (default: all)");
        cmd->add_option("--pop", pop, "population size");
        cmd->add_option("--evals", evals, "function evaluation budget per run");
        cmd->add_option("--seed", seed, "base seed (run i uses base + i)");
        cmd->add_option("--refsize", refsize, "reference set size");
    };

    auto* run_cmd = app.add_subcommand("run", "run the full experiment matrix");
    add_common(run_cmd, true);
    run_cmd->add_option("--runs", runs, "independent runs per cell");
    run_cmd->add_option("--out", out_dir, "output directory")->required();
    run_cmd->add_option("--jobs", jobs, "parallel runs (0 = hardware)");

    auto* single_cmd =
        app.add_subcommand("single", "one run, print indicator values");
    std::string single_problem = "sym_part", single_algorithm = "nsga2";
    add_common(single_cmd, false);
    single_cmd->add_option("--problem", single_problem, "problem name");
    single_cmd->add_option("--algorithm", single_algorithm, "algorithm name");

    auto* table_cmd =
        app.add_subcommand("table", "re-render comparison tables from a results CSV");
    std::string results_path;
    table_cmd->add_option("--results", results_path, "results.csv path")->required();

    auto* refs_cmd =
        app.add_subcommand("dump-refsets", "export reference sets as CSV");
    refs_cmd->add_option("--problems", problems_csv,
                         "comma-separated problem names (default: all)");
    refs_cmd->add_option("--refsize", refsize, "reference set size");
    refs_cmd->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);

        if (run_cmd->parsed()) {
            mmo::ExperimentConfig cfg;
            cfg.problems = split_list(problems_csv);
            cfg.algorithms = split_list(algorithms_csv);
            cfg.runs = runs;
            cfg.population_size = pop;
            cfg.max_evaluations = evals;
            cfg.base_seed = seed;
            cfg.reference_set_size = refsize;
            cfg.output_directory = out_dir;
            cfg.parallelism = jobs;
            const mmo::ComparisonTable table = mmo::run_experiment(cfg);
            std::cout << table.rendered;
        } else if (single_cmd->parsed()) {
            mmo::ExperimentConfig cfg;
            cfg.problems = {single_problem};
            cfg.algorithms = {single_algorithm};
            cfg.runs = 1;
            cfg.population_size = pop;
            cfg.max_evaluations = evals;
            cfg.base_seed = seed;
            cfg.reference_set_size = refsize;
            cfg.parallelism = 1;
            std::vector<mmo::RunRecord> records;
            mmo::run_experiment(cfg, &records);
            const auto& rec = records.at(0);
            std::printf("problem=%s algorithm=%s seed=%llu evaluations=%zu\n",
                        rec.problem.c_str(), rec.algorithm.c_str(),
                        static_cast<unsigned long long>(rec.seed),
                        rec.evaluations_used);
            std::printf("igdx=%.6f igd_plus=%.6f\n", rec.igdx, rec.igd_plus);
        } else if (table_cmd->parsed()) {
            const auto records = mmo::read_results_csv(results_path);
            std::cout << mmo::render_tables(records).rendered;
        } else if (refs_cmd->parsed()) {
            auto names = split_list(problems_csv);
            if (names.empty()) names = mmo::problem_names();
            for (const auto& name : names)
                mmo::dump_reference_sets(name, refsize, out_dir);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    } catch (const mmo::IncompleteDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIncompleteData;
    } catch (const mmo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return 0;
}
