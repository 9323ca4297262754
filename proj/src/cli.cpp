#include "nioa/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>

#include "nioa/experiment.hpp"

namespace nioa {

int bench_main(const std::vector<std::string>& args) {
    CLI::App app{"community-detection benchmark for nature-inspired optimizers"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "execute every configured (dataset, algorithm, seed) "
                                          "run and persist a result store");
    run->add_option("--config", config_path, "experiment config JSON file")
        ->required()
        ->check(CLI::ExistingFile);

    std::string primary, store_dir, pool_name = "both";
    auto* compare = app.add_subcommand("compare", "score one algorithm against the others "
                                                  "stored alongside it");
    compare->add_option("--primary", primary, "primary algorithm (GWO, MFO, SCA, WOA)")
        ->required();
    compare->add_option("--store", store_dir, "result store directory")->required();
    compare->add_option("--pool", pool_name, "optimality pool: both samples or primary only")
        ->check(CLI::IsMember({"both", "primary"}));

    std::string report_store;
    auto* report = app.add_subcommand("report", "emit dataset/fitness/score/rank tables "
                                                "from a result store");
    report->add_option("--store", report_store, "result store directory")->required();

    // CLI11 wants argv-style input; args excludes the program name.
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bench");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (run->parsed()) {
            std::ifstream in(config_path);
            std::ostringstream buf;
            buf << in.rdbuf();
            const auto config = ExperimentConfig::from_json_text(buf.str());
            cmd_run(config);
            std::printf("store written to %s\n", config.output_dir.c_str());
        } else if (compare->parsed()) {
            const auto pool = pool_name == "primary" ? PoolMode::primary : PoolMode::both;
            const auto rows = cmd_compare(store_dir, primary, pool);
            std::printf("%zu score rows written to %s\n", rows.size(), store_dir.c_str());
        } else if (report->parsed()) {
            cmd_report(report_store);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

} // namespace nioa
