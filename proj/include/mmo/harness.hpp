#ifndef MMO_HARNESS_HPP
#define MMO_HARNESS_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmo/algorithms.hpp"
#include "mmo/stats.hpp"

namespace mmo {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IncompleteDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::vector<std::string> problems;    // empty = full registry
    std::vector<std::string> algorithms;  // empty = all four
    std::size_t runs = 31;
    std::size_t population_size = 100;
    std::size_t max_evaluations = 50000;
    std::uint64_t base_seed = 1;
    std::size_t reference_set_size = 10000;
    std::filesystem::path output_directory;  // empty = no files written
    std::size_t parallelism = 0;             // 0 = auto (hardware)
    bool dump_populations = true;
};

struct RunRecord {
    std::string problem;
    std::string algorithm;
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    double igdx = 0.0;
    double igd_plus = 0.0;
    std::size_t evaluations_used = 0;
    Population final_population;
};

struct CellStats {
    double igdx_mean = 0.0, igdx_std = 0.0;
    double igdp_mean = 0.0, igdp_std = 0.0;
};

struct PairVerdict {
    std::string problem, baseline, variant;
    ComparisonVerdict igdx;
    ComparisonVerdict igd_plus;
};

struct ComparisonTable {
    std::vector<std::string> problems;
    std::vector<std::string> algorithms;
    std::map<std::pair<std::string, std::string>, CellStats> cells;
    std::vector<PairVerdict> verdicts;
    // per variant: (+, -, ~) counts for IGDX and IGD+
    std::map<std::string, std::array<std::size_t, 3>> igdx_tally;
    std::map<std::string, std::array<std::size_t, 3>> igdp_tally;
    std::string rendered;
};

/// Executes the runs x problems x algorithms matrix (run-level parallel,
/// results independent of scheduling), computes both indicators per run,
/// and when an output directory is set writes results.csv, per-run
/// population dumps and the rendered tables.
ComparisonTable run_experiment(const ExperimentConfig& cfg,
                               std::vector<RunRecord>* records_out = nullptr);

/// Builds the comparison table text from per-run records.
ComparisonTable render_tables(const std::vector<RunRecord>& records);

/// Writes the non-dominated members of the final population as CSV
/// (header x1..xD,f1..fM, 17 significant digits).
void dump_population(const RunRecord& record, const std::filesystem::path& path);

void write_results_csv(const std::vector<RunRecord>& records,
                       const std::filesystem::path& path);

/// Reads a results CSV back (populations are not stored there).
std::vector<RunRecord> read_results_csv(const std::filesystem::path& path);

/// Exports the decision- and objective-space reference sets of a problem.
void dump_reference_sets(const std::string& problem, std::size_t n,
                         const std::filesystem::path& directory);

/// Index of the run with the median IGD+ value among `records`
/// (all records must belong to one problem/algorithm cell).
std::size_t median_run_index(const std::vector<RunRecord>& records);

const char* to_symbol(Symbol s);

}  // namespace mmo

#endif
