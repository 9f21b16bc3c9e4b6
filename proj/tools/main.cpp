// Batch experiment runner. One subcommand:
//
//   fdd2d run <config.json> [--out DIR] [--seed N] [--trials N] [--workers N]
//
// Exit codes: 0 success, 1 config error, 2 runtime error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdd2d/errors.hpp"
#include "fdd2d/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Link-level analysis and power-allocation toolkit for cooperative "
                 "full-duplex D2D underlay networks"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::int64_t seed = -1;
    std::int64_t trials = -1;
    std::int64_t workers = -1;

    CLI::App* run = app.add_subcommand("run", "Run one experiment from a JSON config");
    run->add_option("config", config_path, "Experiment config (JSON)")->required();
    run->add_option("--out", out_dir, "Output directory for the CSV and meta record");
    run->add_option("--seed", seed, "Override the config seed");
    run->add_option("--trials", trials, "Override the config trial count");
    run->add_option("--workers", workers, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        std::ifstream in(config_path);
        if (!in)
            throw fdd2d::ConfigError("cannot read config file: " + config_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw fdd2d::ConfigError(std::string("config parse error: ") + e.what());
        }
        if (seed >= 0)
            j["seed"] = static_cast<std::uint64_t>(seed);
        if (trials >= 0)
            j["trials"] = static_cast<std::uint64_t>(trials);
        if (workers >= 0)
            j["workers"] = static_cast<unsigned>(workers);

        const auto cfg = fdd2d::ExperimentConfig::from_json(j);
        const auto out = fdd2d::run_experiment(cfg, out_dir);
        std::cout << out.csv_path << "\n" << out.meta_path << "\n";
        return 0;
    } catch (const fdd2d::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
