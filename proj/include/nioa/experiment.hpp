#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nioa/comparison.hpp"
#include "nioa/optimizer.hpp"

namespace nioa {

// Everything one benchmark execution needs. JSON round-trips are strict:
// unknown keys are rejected so typos fail fast instead of silently running
// with defaults.
struct ExperimentConfig {
    std::vector<std::string> datasets = {"karate", "dolphin", "football"};
    std::vector<std::string> algorithms = {"GWO", "MFO", "SCA", "WOA"};
    int runs_per_pair = 30;
    int population_size = 30;
    int max_iterations = 500;
    std::map<std::string, int> k; // per-dataset override; bundled defaults otherwise
    std::uint64_t base_seed = 1;
    double epsilon = 1e-6;
    double spiral_b = 1.0;
    double a_initial = 2.0;
    std::string output_dir = "bench_out";

    static ExperimentConfig from_json_text(const std::string& text);
    std::string to_json_text() const; // canonical form (sorted keys, 2-space indent)
    std::string hash() const;         // FNV-1a over the canonical form, 16 hex digits

    int k_for(const std::string& dataset) const;
    void validate() const; // std::invalid_argument on unknown dataset/algorithm, bad counts
};

// One persisted run: the JSON document is
// {algorithm, dataset, seed, k, best_fitness, labels, trajectory} with labels
// 1-based in graph node order.
struct RunRecord {
    std::string algorithm;
    std::string dataset;
    std::uint64_t seed = 0;
    int k = 1;
    double best_fitness = 0.0;
    std::vector<int> labels;
    std::vector<double> trajectory;

    bool operator==(const RunRecord&) const = default;
};

RunRecord make_record(const std::string& dataset, const RunResult& r);
std::string record_to_json(const RunRecord& r);
RunRecord record_from_json(const std::string& text);

// On-disk layout of a result store, rooted at config.output_dir:
//   manifest.json                                  config + hash + timestamp
//   runs/<dataset>/<algorithm>/run_<seed>.json     one document per run
//   summary.csv                                    mean/best fitness per pair
// compare/report add CSVs next to these.
struct ResultStore {
    ExperimentConfig config;
    // keyed by (dataset, algorithm), records ordered by seed
    std::map<std::pair<std::string, std::string>, std::vector<RunRecord>> runs;
};

// Executes every (dataset x algorithm x seed) run, fanning out over a thread
// pool capped by BENCH_THREADS, then writes records, summary.csv and
// manifest.json in deterministic order. Throws std::runtime_error on I/O
// failure, std::invalid_argument on config problems.
void cmd_run(const ExperimentConfig& config);

// Loads a store written by cmd_run. Throws std::runtime_error when the
// manifest or any expected run record is missing.
ResultStore load_store(const std::string& store_dir);

// Builds prasatul matrices of primary vs every other configured algorithm on
// every configured dataset, writes scores_<primary>.csv and
// averaged_scores_<primary>.csv into the store, and returns the score rows.
// Missing run sets are reported by (dataset, algorithm) tuple.
std::vector<ScoreSet> cmd_compare(const std::string& store_dir,
                                  const std::string& primary,
                                  PoolMode pool = PoolMode::both);

// Emits report_dataset_stats.csv, report_avi.csv, report_avi_comparison.csv,
// report_averaged_scores.csv and report_ranks.csv, and prints the dataset and
// fitness tables. Everything is recomputed from the run records. Throws
// std::domain_error on an empty store.
void cmd_report(const std::string& store_dir);

// Worker cap for cmd_run: hardware concurrency clamped by the BENCH_THREADS
// environment variable (values < 1 mean 1) and by the task count.
int worker_count(std::size_t tasks);

// Externally reported mean-AVI baselines printed side-by-side in the report
// for the bundled datasets; NaN for unknown (dataset, algorithm).
double reference_mean_avi(const std::string& dataset, const std::string& algorithm);

} // namespace nioa
