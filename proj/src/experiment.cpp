#include "nioa/experiment.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nioa/datasets.hpp"

namespace nioa {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

json config_to_json(const ExperimentConfig& c) {
    json j;
    j["datasets"] = c.datasets;
    j["algorithms"] = c.algorithms;
    j["runs_per_pair"] = c.runs_per_pair;
    j["population_size"] = c.population_size;
    j["max_iterations"] = c.max_iterations;
    j["k"] = c.k;
    j["base_seed"] = c.base_seed;
    j["epsilon"] = c.epsilon;
    j["spiral_b"] = c.spiral_b;
    j["a_initial"] = c.a_initial;
    j["output_dir"] = c.output_dir;
    return j;
}

ExperimentConfig config_from_json(const json& j) {
    static const std::set<std::string> known = {
        "datasets",       "algorithms", "runs_per_pair", "population_size",
        "max_iterations", "k",          "base_seed",     "epsilon",
        "spiral_b",       "a_initial",  "output_dir"};
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key)) {
            throw std::invalid_argument("unknown config key \"" + key + "\"");
        }
    }
    ExperimentConfig c;
    if (j.contains("datasets")) c.datasets = j.at("datasets").get<std::vector<std::string>>();
    if (j.contains("algorithms")) c.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    if (j.contains("runs_per_pair")) c.runs_per_pair = j.at("runs_per_pair").get<int>();
    if (j.contains("population_size")) c.population_size = j.at("population_size").get<int>();
    if (j.contains("max_iterations")) c.max_iterations = j.at("max_iterations").get<int>();
    if (j.contains("k")) c.k = j.at("k").get<std::map<std::string, int>>();
    if (j.contains("base_seed")) c.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
    if (j.contains("spiral_b")) c.spiral_b = j.at("spiral_b").get<double>();
    if (j.contains("a_initial")) c.a_initial = j.at("a_initial").get<double>();
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
    return c;
}

fs::path record_path(const fs::path& root, const std::string& dataset,
                     const std::string& algorithm, std::uint64_t seed) {
    return root / "runs" / dataset / algorithm / ("run_" + std::to_string(seed) + ".json");
}

struct FitnessLists {
    // best_fitness per run, seed order, for one (dataset, algorithm)
    std::map<std::pair<std::string, std::string>, std::vector<double>> values;

    const std::vector<double>& get(const std::string& ds, const std::string& alg) const {
        return values.at({ds, alg});
    }
};

FitnessLists fitness_lists(const ResultStore& store) {
    FitnessLists out;
    for (const auto& [key, records] : store.runs) {
        auto& v = out.values[key];
        v.reserve(records.size());
        for (const auto& r : records) v.push_back(r.best_fitness);
    }
    return out;
}

ScoreSet score_pair(const std::string& dataset, const std::string& primary,
                    const std::string& alternative, const std::vector<double>& runs_p,
                    const std::vector<double>& runs_q, double eps, PoolMode pool) {
    const PrasatulMatrix m = build_prasatul(runs_p, runs_q, eps, pool);
    ScoreSet s;
    s.dataset = dataset;
    s.primary = primary;
    s.alternative = alternative;
    std::tie(s.DO, s.DC) = d_scores(m);
    std::tie(s.KO, s.KC, s.KT) = k_scores(m);
    return s;
}

std::vector<std::string> alternatives_of(const ExperimentConfig& cfg, const std::string& primary) {
    std::vector<std::string> alts;
    for (const auto& a : cfg.algorithms) {
        if (a != primary) alts.push_back(a);
    }
    return alts;
}

// Score rows + averages for one primary over every configured dataset.
std::pair<std::vector<ScoreSet>, std::vector<AveragedScores>>
scores_for_primary(const ResultStore& store, const FitnessLists& fits, const std::string& primary,
                   PoolMode pool) {
    const auto alts = alternatives_of(store.config, primary);
    if (alts.empty()) {
        throw std::domain_error("no alternative algorithms to compare \"" + primary +
                                "\" against");
    }
    std::vector<ScoreSet> rows;
    std::vector<AveragedScores> averages;
    for (const auto& ds : store.config.datasets) {
        std::vector<ScoreSet> per_dataset;
        for (const auto& alt : alts) {
            per_dataset.push_back(score_pair(ds, primary, alt, fits.get(ds, primary),
                                             fits.get(ds, alt), store.config.epsilon, pool));
        }
        averages.push_back(average_scores(per_dataset));
        rows.insert(rows.end(), per_dataset.begin(), per_dataset.end());
    }
    return {rows, averages};
}

} // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
    }
    return config_from_json(j);
}

std::string ExperimentConfig::to_json_text() const {
    return config_to_json(*this).dump(2) + "\n";
}

std::string ExperimentConfig::hash() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(to_json_text())));
    return buf;
}

int ExperimentConfig::k_for(const std::string& dataset) const {
    if (auto it = k.find(dataset); it != k.end()) return it->second;
    return default_k(dataset);
}

void ExperimentConfig::validate() const {
    if (datasets.empty()) throw std::invalid_argument("config lists no datasets");
    if (algorithms.empty()) throw std::invalid_argument("config lists no algorithms");
    for (const auto& ds : datasets) {
        try {
            builtin_dataset_text(ds);
        } catch (const std::out_of_range& e) {
            throw std::invalid_argument(e.what());
        }
    }
    std::set<std::string> seen_alg;
    for (const auto& a : algorithms) {
        if (to_string(algorithm_from_string(a)) != a) {
            throw std::invalid_argument("algorithm name \"" + a +
                                        "\" must be canonical (GWO, MFO, SCA, WOA)");
        }
        if (!seen_alg.insert(a).second) {
            throw std::invalid_argument("algorithm \"" + a + "\" listed twice");
        }
    }
    std::set<std::string> seen_ds(datasets.begin(), datasets.end());
    if (seen_ds.size() != datasets.size()) throw std::invalid_argument("dataset listed twice");
    for (const auto& [ds, kk] : k) {
        try {
            builtin_dataset_text(ds);
        } catch (const std::out_of_range& e) {
            throw std::invalid_argument(std::string("k override: ") + e.what());
        }
        if (kk < 1) throw std::invalid_argument("k for " + ds + " must be >= 1");
    }
    if (runs_per_pair < 1) throw std::invalid_argument("runs_per_pair must be >= 1");
    if (population_size < 1) throw std::invalid_argument("population_size must be >= 1");
    if (std::count(algorithms.begin(), algorithms.end(), "GWO") && population_size < 3) {
        throw std::invalid_argument("GWO needs population_size >= 3");
    }
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
    if (!(spiral_b > 0.0)) throw std::invalid_argument("spiral_b must be positive");
    if (!(a_initial > 0.0)) throw std::invalid_argument("a_initial must be positive");
    if (output_dir.empty()) throw std::invalid_argument("output_dir must not be empty");
}

RunRecord make_record(const std::string& dataset, const RunResult& r) {
    RunRecord rec;
    rec.algorithm = to_string(r.algorithm);
    rec.dataset = dataset;
    rec.seed = r.seed;
    rec.k = r.best_partition.k_max;
    rec.best_fitness = r.best_fitness;
    rec.labels = r.best_partition.labels;
    rec.trajectory = r.trajectory;
    return rec;
}

std::string record_to_json(const RunRecord& r) {
    json j;
    j["algorithm"] = r.algorithm;
    j["dataset"] = r.dataset;
    j["seed"] = r.seed;
    j["k"] = r.k;
    j["best_fitness"] = r.best_fitness;
    j["labels"] = r.labels;
    j["trajectory"] = r.trajectory;
    return j.dump(2) + "\n";
}

RunRecord record_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("run record is not valid JSON: ") + e.what());
    }
    RunRecord r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.dataset = j.at("dataset").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.k = j.at("k").get<int>();
    r.best_fitness = j.at("best_fitness").get<double>();
    r.labels = j.at("labels").get<std::vector<int>>();
    r.trajectory = j.at("trajectory").get<std::vector<double>>();
    return r;
}

int worker_count(std::size_t tasks) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    long cap = static_cast<long>(hw);
    if (const char* env = std::getenv("BENCH_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env) cap = std::min(cap, std::max(v, 1L));
    }
    cap = std::min(cap, static_cast<long>(std::max<std::size_t>(tasks, 1)));
    return static_cast<int>(std::max(cap, 1L));
}

void cmd_run(const ExperimentConfig& config) {
    config.validate();

    struct Task {
        std::string dataset;
        std::string algorithm;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const auto& ds : config.datasets) {
        builtin_dataset(ds); // parse once up front, before threads share it
        for (const auto& alg : config.algorithms) {
            for (int i = 0; i < config.runs_per_pair; ++i) {
                tasks.push_back({ds, alg, config.base_seed + static_cast<std::uint64_t>(i)});
            }
        }
    }

    std::vector<RunRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || failed.load()) return;
            try {
                const Task& task = tasks[i];
                OptimizerConfig oc;
                oc.algorithm = algorithm_from_string(task.algorithm);
                oc.population_size = config.population_size;
                oc.max_iterations = config.max_iterations;
                oc.k_max = config.k_for(task.dataset);
                oc.seed = task.seed;
                oc.spiral_b = config.spiral_b;
                oc.a_initial = config.a_initial;
                records[i] = make_record(task.dataset, optimize(builtin_dataset(task.dataset), oc));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    const int workers = worker_count(tasks.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(work);
        for (auto& th : threads) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    // Single-threaded write phase in (dataset, algorithm, seed) task order.
    const fs::path root(config.output_dir);
    std::error_code ec;
    fs::create_directories(root, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + root.string() + ": " +
                                     ec.message());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto path = record_path(root, tasks[i].dataset, tasks[i].algorithm, tasks[i].seed);
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw std::runtime_error("cannot create " + path.parent_path().string() + ": " +
                                         ec.message());
        write_file(path, record_to_json(records[i]));
    }

    // summary.csv: per dataset, algorithms ordered by mean fitness (best first).
    std::ostringstream summary;
    summary << "dataset,algorithm,mean_avi,best_avi\n";
    std::size_t offset = 0;
    for (const auto& ds : config.datasets) {
        struct Row {
            std::string alg;
            double mean, best;
        };
        std::vector<Row> rows;
        for (const auto& alg : config.algorithms) {
            double sum = 0.0, best = -1.0;
            for (int i = 0; i < config.runs_per_pair; ++i) {
                const double f = records[offset + static_cast<std::size_t>(i)].best_fitness;
                sum += f;
                best = std::max(best, f);
            }
            offset += static_cast<std::size_t>(config.runs_per_pair);
            rows.push_back({alg, sum / config.runs_per_pair, best});
        }
        std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
            if (a.mean != b.mean) return a.mean > b.mean;
            return a.alg < b.alg;
        });
        for (const auto& r : rows) {
            summary << ds << ',' << r.alg << ',' << fmt(r.mean, 6) << ',' << fmt(r.best, 6)
                    << '\n';
        }
    }
    write_file(root / "summary.csv", summary.str());

    json manifest;
    manifest["config"] = config_to_json(config);
    manifest["config_hash"] = config.hash();
    manifest["created_utc"] = utc_now();
    write_file(root / "manifest.json", manifest.dump(2) + "\n");
}

ResultStore load_store(const std::string& store_dir) {
    const fs::path root(store_dir);
    const fs::path manifest_path = root / "manifest.json";
    if (!fs::exists(manifest_path)) {
        throw std::runtime_error("no manifest.json in " + root.string() +
                                 " (is it a result store?)");
    }
    json manifest;
    try {
        manifest = json::parse(read_file(manifest_path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error("manifest.json is not valid JSON: " + std::string(e.what()));
    }

    ResultStore store;
    store.config = config_from_json(manifest.at("config"));
    const std::string stored_hash = manifest.at("config_hash").get<std::string>();
    if (stored_hash != store.config.hash()) {
        throw std::runtime_error("manifest config hash " + stored_hash +
                                 " does not match the stored config (" + store.config.hash() +
                                 ")");
    }

    for (const auto& ds : store.config.datasets) {
        for (const auto& alg : store.config.algorithms) {
            auto& list = store.runs[{ds, alg}];
            for (int i = 0; i < store.config.runs_per_pair; ++i) {
                const std::uint64_t seed = store.config.base_seed + static_cast<std::uint64_t>(i);
                const auto path = record_path(root, ds, alg, seed);
                if (!fs::exists(path)) {
                    throw std::runtime_error("missing run record for (dataset=" + ds +
                                             ", algorithm=" + alg +
                                             ", seed=" + std::to_string(seed) + ")");
                }
                list.push_back(record_from_json(read_file(path)));
            }
        }
    }
    return store;
}

std::vector<ScoreSet> cmd_compare(const std::string& store_dir, const std::string& primary_name,
                                  PoolMode pool) {
    const ResultStore store = load_store(store_dir);
    const std::string primary = to_string(algorithm_from_string(primary_name));
    if (std::find(store.config.algorithms.begin(), store.config.algorithms.end(), primary) ==
        store.config.algorithms.end()) {
        throw std::invalid_argument("primary algorithm " + primary + " has no runs in " +
                                    store_dir);
    }

    const auto fits = fitness_lists(store);
    auto [rows, averages] = scores_for_primary(store, fits, primary, pool);

    std::ostringstream scores_csv;
    scores_csv << "dataset,primary,alternative,DO,DC,KO,KC,KT\n";
    for (const auto& s : rows) {
        scores_csv << s.dataset << ',' << s.primary << ',' << s.alternative << ',' << fmt(s.DO, 4)
                   << ',' << fmt(s.DC, 4) << ',' << fmt(s.KO, 4) << ',' << fmt(s.KC, 4) << ','
                   << fmt(s.KT, 4) << '\n';
    }
    write_file(fs::path(store_dir) / ("scores_" + primary + ".csv"), scores_csv.str());

    std::ostringstream avg_csv;
    avg_csv << "dataset,primary,ADO,ADC,AKO,AKC,AKT\n";
    for (const auto& a : averages) {
        avg_csv << a.dataset << ',' << a.primary << ',' << fmt(a.ADO, 4) << ',' << fmt(a.ADC, 4)
                << ',' << fmt(a.AKO, 4) << ',' << fmt(a.AKC, 4) << ',' << fmt(a.AKT, 4) << '\n';
    }
    write_file(fs::path(store_dir) / ("averaged_scores_" + primary + ".csv"), avg_csv.str());

    return rows;
}

double reference_mean_avi(const std::string& dataset, const std::string& algorithm) {
    // Externally reported mean-AVI baselines for the bundled networks, shown
    // next to measured values for inspection; they are not a test target.
    static const std::map<std::pair<std::string, std::string>, double> ref = {
        {{"karate", "GWO"}, 0.2430},   {{"karate", "MFO"}, 0.3089},
        {{"karate", "SCA"}, 0.2494},   {{"karate", "WOA"}, 0.1678},
        {{"dolphin", "GWO"}, 0.1540},  {{"dolphin", "MFO"}, 0.1595},
        {{"dolphin", "SCA"}, 0.1550},  {{"dolphin", "WOA"}, 0.1330},
        {{"football", "GWO"}, 0.0288}, {{"football", "MFO"}, 0.0329},
        {{"football", "SCA"}, 0.0289}, {{"football", "WOA"}, 0.0294},
    };
    auto it = ref.find({dataset, algorithm});
    return it == ref.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
}

void cmd_report(const std::string& store_dir) {
    const ResultStore store = load_store(store_dir);
    std::size_t total_records = 0;
    for (const auto& [key, records] : store.runs) total_records += records.size();
    if (total_records == 0) throw std::domain_error("store " + store_dir + " holds no runs");

    const fs::path root(store_dir);

    // (a) dataset statistics
    std::ostringstream stats;
    stats << "dataset,nodes,edges,avg_degree\n";
    std::printf("dataset statistics\n");
    std::printf("%-10s %8s %8s %12s\n", "dataset", "nodes", "edges", "avg_degree");
    for (const auto& ds : store.config.datasets) {
        const Graph& g = builtin_dataset(ds);
        stats << ds << ',' << g.node_count() << ',' << g.edge_count() << ','
              << fmt(g.average_degree(), 2) << '\n';
        std::printf("%-10s %8d %8zu %12s\n", ds.c_str(), g.node_count(), g.edge_count(),
                    fmt(g.average_degree(), 2).c_str());
    }
    write_file(root / "report_dataset_stats.csv", stats.str());

    // mean fitness per (dataset, algorithm)
    std::map<std::pair<std::string, std::string>, double> mean_avi;
    for (const auto& [key, records] : store.runs) {
        double sum = 0.0;
        for (const auto& r : records) sum += r.best_fitness;
        mean_avi[key] = records.empty() ? 0.0 : sum / static_cast<double>(records.size());
    }

    // (b) bar-chart data + side-by-side reference comparison
    std::ostringstream avi_csv, cmp_csv;
    avi_csv << "dataset,algorithm,mean_avi\n";
    cmp_csv << "dataset,algorithm,mean_avi,reference_avi\n";
    std::printf("\nmean fitness (measured vs externally reported reference)\n");
    std::printf("%-10s %-6s %12s %12s\n", "dataset", "algo", "measured", "reference");
    for (const auto& ds : store.config.datasets) {
        for (const auto& alg : store.config.algorithms) {
            const double measured = mean_avi.at({ds, alg});
            const double reference = reference_mean_avi(ds, alg);
            avi_csv << ds << ',' << alg << ',' << fmt(measured, 6) << '\n';
            cmp_csv << ds << ',' << alg << ',' << fmt(measured, 6) << ','
                    << (std::isnan(reference) ? std::string() : fmt(reference, 4)) << '\n';
            std::printf("%-10s %-6s %12s %12s\n", ds.c_str(), alg.c_str(),
                        fmt(measured, 6).c_str(),
                        std::isnan(reference) ? "-" : fmt(reference, 4).c_str());
        }
    }
    write_file(root / "report_avi.csv", avi_csv.str());
    write_file(root / "report_avi_comparison.csv", cmp_csv.str());

    // (c) averaged scores for every algorithm as primary
    const auto fits = fitness_lists(store);
    std::map<std::pair<std::string, std::string>, AveragedScores> averaged; // (ds, primary)
    std::ostringstream avg_csv;
    avg_csv << "dataset,primary,ADO,ADC,AKO,AKC,AKT\n";
    const bool comparable = store.config.algorithms.size() >= 2;
    if (comparable) {
        for (const auto& primary : store.config.algorithms) {
            auto [rows, averages] = scores_for_primary(store, fits, primary, PoolMode::both);
            (void)rows;
            for (const auto& a : averages) averaged[{a.dataset, primary}] = a;
        }
        for (const auto& ds : store.config.datasets) {
            for (const auto& primary : store.config.algorithms) {
                const auto& a = averaged.at({ds, primary});
                avg_csv << a.dataset << ',' << a.primary << ',' << fmt(a.ADO, 4) << ','
                        << fmt(a.ADC, 4) << ',' << fmt(a.AKO, 4) << ',' << fmt(a.AKC, 4) << ','
                        << fmt(a.AKT, 4) << '\n';
            }
        }
    }
    write_file(root / "report_averaged_scores.csv", avg_csv.str());

    // (d) rank tables per measure
    std::ostringstream ranks_csv;
    ranks_csv << "dataset,measure,algorithm,score,rank\n";
    if (comparable) {
        const std::array<std::pair<std::string, double AveragedScores::*>, 5> measures = {{
            {"ADO", &AveragedScores::ADO},
            {"ADC", &AveragedScores::ADC},
            {"AKO", &AveragedScores::AKO},
            {"AKC", &AveragedScores::AKC},
            {"AKT", &AveragedScores::AKT},
        }};
        for (const auto& ds : store.config.datasets) {
            for (const auto& [name, field] : measures) {
                std::vector<std::pair<std::string, double>> entries;
                for (const auto& alg : store.config.algorithms) {
                    entries.emplace_back(alg, averaged.at({ds, alg}).*field);
                }
                std::map<std::string, double> score_of(entries.begin(), entries.end());
                for (const auto& [alg, r] : rank(entries)) {
                    ranks_csv << ds << ',' << name << ',' << alg << ',' << fmt(score_of[alg], 4)
                              << ',' << r << '\n';
                }
            }
        }
    }
    write_file(root / "report_ranks.csv", ranks_csv.str());
    std::printf("\nreport files written to %s\n", root.string().c_str());
}

} // namespace nioa
