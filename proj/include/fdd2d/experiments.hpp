#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdd2d/model.hpp"

// Batch experiment runner behind the CLI. A run consumes one JSON config,
// produces one CSV plus a *_meta.json record (resolved config, seed,
// version, derived summary values), and is byte-reproducible for a fixed
// (config, seed, workers-independent) run.

namespace fdd2d {

inline constexpr const char* kVersion = "0.1.0";

enum class ExperimentKind {
    RateRegion,
    OutageSweep,
    MaxMinSweep,
    OutageOptSweep,
    LambdaSweep,
    TrrCrossover,
};

struct SweepRange {
    double from = 0.0;
    double to = 0.0;
    int points = 0;

    std::vector<double> values() const;
};

struct ExperimentConfig {
    ExperimentKind kind;
    std::uint64_t seed = 1;
    std::uint64_t trials = 100000;
    unsigned workers = 0;

    NetworkParams params;
    QosTargets targets{1.0, 1.0};

    // RateRegion
    ChannelState channel{0.5, 0.5, 0.5, 0.5};
    std::vector<double> lambda_list;
    int n_points = 20;
    bool geometric_spacing = false;

    // OutageSweep
    std::vector<double> alpha_list;
    SweepRange p_C_dBm_sweep;

    // MaxMinSweep
    SweepRange P_C_dBm_sweep;

    // OutageOptSweep
    SweepRange alpha_sweep;
    double fixed_alpha = 0.95;
    double fixed_p_C_dBm = 23.0;
    std::optional<int> grid_n; // optional exhaustive-search comparison in the meta record

    // LambdaSweep / TrrCrossover
    std::vector<double> beta_list;
    SweepRange lambda_sweep;
    SweepRange trr_dB_sweep;
    std::optional<double> fixed_trr_dB; // LambdaSweep: recompute p_C from the TRR per point

    nlohmann::json resolved; // full config as run, embedded in the meta record

    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig load_file(const std::string& path);
};

struct RunOutput {
    std::string csv_path;
    std::string meta_path;
};

// Executes the experiment and writes <name>.csv and <name>_meta.json under
// out_dir. The CSV is composed in memory first, so a failing run leaves no
// partial file. Throws ConfigError for semantic config problems and
// std::runtime_error for IO failures.
RunOutput run_experiment(const ExperimentConfig& config, const std::string& out_dir);

// Shortest round-trip decimal representation; the CSV number format.
std::string format_double(double value);

} // namespace fdd2d
