#include "fdd2d/experiments.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "fdd2d/analysis.hpp"
#include "fdd2d/errors.hpp"
#include "fdd2d/montecarlo.hpp"
#include "fdd2d/outage_opt.hpp"
#include "fdd2d/rate_region.hpp"
#include "fdd2d/rng.hpp"
#include "fdd2d/scenario.hpp"
#include "fdd2d/units.hpp"

namespace fdd2d {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw ConfigError(std::string("missing config field: ") + name);
    return *it;
}

double get_num(const json& j, const char* name) {
    const json& v = require_field(j, name);
    if (!v.is_number())
        throw ConfigError(std::string("config field must be a number: ") + name);
    return v.get<double>();
}

double get_num_or(const json& j, const char* name, double fallback) {
    auto it = j.find(name);
    return it == j.end() ? fallback : it->get<double>();
}

SweepRange parse_sweep(const json& j, const char* name) {
    const json& v = require_field(j, name);
    SweepRange s;
    s.from = get_num(v, "from");
    s.to = get_num(v, "to");
    s.points = static_cast<int>(get_num(v, "points"));
    if (s.points < 1)
        throw ConfigError(std::string(name) + ": sweep needs at least one point");
    if (s.from > s.to)
        throw ConfigError(std::string(name) + ": sweep range must be ordered (from <= to)");
    if (s.points == 1 && s.from != s.to)
        throw ConfigError(std::string(name) + ": a single-point sweep needs from == to");
    return s;
}

std::vector<double> parse_list(const json& j, const char* name) {
    const json& v = require_field(j, name);
    if (!v.is_array() || v.empty())
        throw ConfigError(std::string(name) + ": must be a non-empty array");
    return v.get<std::vector<double>>();
}

ExperimentKind parse_kind(const std::string& s) {
    static const std::map<std::string, ExperimentKind> kinds = {
        {"RateRegion", ExperimentKind::RateRegion},
        {"OutageSweep", ExperimentKind::OutageSweep},
        {"MaxMinSweep", ExperimentKind::MaxMinSweep},
        {"OutageOptSweep", ExperimentKind::OutageOptSweep},
        {"LambdaSweep", ExperimentKind::LambdaSweep},
        {"TrrCrossover", ExperimentKind::TrrCrossover},
    };
    auto it = kinds.find(s);
    if (it == kinds.end())
        throw ConfigError("unknown experiment: " + s);
    return it->second;
}

const char* kind_name(ExperimentKind k) {
    switch (k) {
    case ExperimentKind::RateRegion: return "rate_region";
    case ExperimentKind::OutageSweep: return "outage_sweep";
    case ExperimentKind::MaxMinSweep: return "maxmin_sweep";
    case ExperimentKind::OutageOptSweep: return "outage_opt_sweep";
    case ExperimentKind::LambdaSweep: return "lambda_sweep";
    case ExperimentKind::TrrCrossover: return "trr_crossover";
    }
    return "experiment";
}

NetworkParams parse_params(const json& j, std::uint64_t seed) {
    const json& p = require_field(j, "params");
    NetworkParams params;

    // Noise from density x bandwidth, or pinned directly for normalized
    // fixed-gain studies.
    double sigma2 = noise_power_mw(get_num_or(p, "noise_density_dBm_per_Hz", -174.0),
                                   get_num_or(p, "bandwidth_Hz", 180e3));
    if (p.contains("sigma2_dBm"))
        sigma2 = dbm_to_mw(get_num(p, "sigma2_dBm"));
    params.sigma2_B = params.sigma2_C = params.sigma2_D = sigma2;
    params.beta = get_num(p, "beta");
    params.lambda = get_num(p, "lambda");
    params.theta = dbm_to_mw(get_num(p, "theta_dBm"));
    params.P_S = dbm_to_mw(get_num(p, "P_S_dBm"));
    params.P_C = dbm_to_mw(get_num(p, "P_C_dBm"));

    if (p.contains("phi")) {
        const json& phi = p["phi"];
        params.phi_SB = get_num(phi, "SB");
        params.phi_SC = get_num(phi, "SC");
        params.phi_CB = get_num(phi, "CB");
        params.phi_CD = get_num(phi, "CD");
    } else if (p.contains("geometry") || p.contains("geometry_drop")) {
        Geometry geom;
        if (p.contains("geometry")) {
            const json& g = p["geometry"];
            geom.cell_radius = get_num(g, "cell_radius");
            geom.min_bs_distance = get_num_or(g, "min_bs_distance", 0.0);
            geom.pathloss_exponent = get_num(g, "pathloss_exponent");
            auto vec = [&](const char* name) {
                const json& v = require_field(g, name);
                return Vec2{v.at(0).get<double>(), v.at(1).get<double>()};
            };
            geom.bs = vec("bs");
            geom.cu = vec("cu");
            geom.dt = vec("dt");
            geom.dr = vec("dr");
        } else {
            const json& g = p["geometry_drop"];
            GeometryConstraints c;
            c.cell_radius = get_num_or(g, "cell_radius", c.cell_radius);
            c.min_bs_distance = get_num_or(g, "min_bs_distance", c.min_bs_distance);
            c.d2d_min = get_num_or(g, "d2d_min", c.d2d_min);
            c.d2d_max = get_num_or(g, "d2d_max", c.d2d_max);
            c.pathloss_exponent = get_num_or(g, "pathloss_exponent", c.pathloss_exponent);
            geom = random_drop(c, seed);
        }
        RadioConfig radio;
        radio.carrier_Hz = get_num_or(p, "carrier_Hz", radio.carrier_Hz);
        radio.bandwidth_Hz = get_num_or(p, "bandwidth_Hz", radio.bandwidth_Hz);
        radio.noise_density_dBm_per_Hz =
            get_num_or(p, "noise_density_dBm_per_Hz", radio.noise_density_dBm_per_Hz);
        radio.beta = params.beta;
        radio.lambda = params.lambda;
        radio.theta_dBm = get_num(p, "theta_dBm");
        radio.P_S_dBm = get_num(p, "P_S_dBm");
        radio.P_C_dBm = get_num(p, "P_C_dBm");
        const NetworkParams from_geom = build_params(geom, radio);
        params.phi_SB = from_geom.phi_SB;
        params.phi_SC = from_geom.phi_SC;
        params.phi_CB = from_geom.phi_CB;
        params.phi_CD = from_geom.phi_CD;
    } else {
        throw ConfigError("params: expected one of \"phi\", \"geometry\", \"geometry_drop\"");
    }

    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return params;
}

// CSV text is assembled fully in memory and written in one shot, so a
// failing experiment leaves no partial file behind.
class CsvBuilder {
  public:
    explicit CsvBuilder(std::string header) { text_ = std::move(header) + "\n"; }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                text_ += ',';
            text_ += cells[i];
        }
        text_ += '\n';
    }

    const std::string& text() const { return text_; }

  private:
    std::string text_;
};

std::string str(double v) { return format_double(v); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out)
        throw std::runtime_error("failed writing output file: " + path);
}

// Linear-interpolated sign changes of fd - hd along x.
std::vector<double> crossings(const std::vector<double>& x, const std::vector<double>& fd,
                              const std::vector<double>& hd) {
    std::vector<double> out;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double d0 = fd[i - 1] - hd[i - 1];
        const double d1 = fd[i] - hd[i];
        if (d0 == 0.0) {
            out.push_back(x[i - 1]);
        } else if ((d0 < 0.0) != (d1 < 0.0)) {
            out.push_back(x[i - 1] + (x[i] - x[i - 1]) * d0 / (d0 - d1));
        }
    }
    return out;
}

json run_rate_region(const ExperimentConfig& cfg, CsvBuilder& csv) {
    NetworkParams params = cfg.params;
    json summary;
    for (double lambda : cfg.lambda_list) {
        params.lambda = lambda;
        const auto spacing =
            cfg.geometric_spacing ? BoundarySpacing::Geometric : BoundarySpacing::Uniform;
        const auto boundary = pareto_boundary(params, cfg.channel, cfg.n_points, spacing);
        for (const ParetoPoint& pt : boundary)
            csv.row({str(lambda), str(pt.R_B_target), str(pt.alpha), str(pt.p_C), str(pt.R_D)});
        summary["R_B_max"] = boundary.back().R_B_target;
    }
    return summary;
}

json run_outage_sweep(const ExperimentConfig& cfg, CsvBuilder& csv) {
    const std::vector<double> pc_dbm = cfg.p_C_dBm_sweep.values();
    std::uint64_t row = 0;
    for (double alpha : cfg.alpha_list) {
        for (double dbm : pc_dbm) {
            const double p = dbm_to_mw(dbm);
            if (p > cfg.params.P_C * (1.0 + 1e-12))
                throw ConfigError("OutageSweep: p_C sweep exceeds the CU power budget P_C");
            const PowerAllocation alloc{alpha, p};
            const double exact = outage_exact(cfg.params, alloc, cfg.targets).p_out;
            const double bound = outage_upper_bound(cfg.params, alloc, cfg.targets);
            const Estimate mc = estimate_joint_outage(cfg.params, alloc, cfg.targets, cfg.trials,
                                                      derive_seed(cfg.seed, row), cfg.workers);
            csv.row({str(alpha), str(dbm), str(exact), str(bound), str(mc.mean),
                     str(mc.std_err)});
            ++row;
        }
    }
    return json{{"rows", row}};
}

json run_maxmin_sweep(const ExperimentConfig& cfg, CsvBuilder& csv) {
    NetworkParams params = cfg.params;
    const std::vector<double> budgets = cfg.P_C_dBm_sweep.values();
    std::uint64_t idx = 0;
    for (double dbm : budgets) {
        params.P_C = dbm_to_mw(dbm);
        const std::uint64_t point_seed = derive_seed(cfg.seed, idx++);
        const AverageRates joa =
            average_rates(params, RateStrategy::JOA, cfg.trials, point_seed, cfg.workers);
        const AverageRates rfa =
            average_rates(params, RateStrategy::RFA, cfg.trials, point_seed, cfg.workers);
        csv.row({str(dbm), "joa", str(joa.R_B), str(joa.R_D), str(joa.R_min), str(joa.sum_rate)});
        csv.row({str(dbm), "rfa", str(rfa.R_B), str(rfa.R_D), str(rfa.R_min), str(rfa.sum_rate)});
    }
    return json{{"points", budgets.size()}};
}

json run_outage_opt_sweep(const ExperimentConfig& cfg, CsvBuilder& csv) {
    const OutageOptSolution sol = solve_min_outage(cfg.params, cfg.targets);

    for (double alpha : cfg.alpha_sweep.values()) {
        const PowerAllocation alloc{alpha, dbm_to_mw(cfg.fixed_p_C_dBm)};
        csv.row({"alpha", str(alpha), str(outage_exact(cfg.params, alloc, cfg.targets).p_out),
                 str(outage_upper_bound(cfg.params, alloc, cfg.targets))});
    }
    for (double dbm : cfg.p_C_dBm_sweep.values()) {
        const PowerAllocation alloc{cfg.fixed_alpha, dbm_to_mw(dbm)};
        csv.row({"p_C_dBm", str(dbm), str(outage_exact(cfg.params, alloc, cfg.targets).p_out),
                 str(outage_upper_bound(cfg.params, alloc, cfg.targets))});
    }

    json summary = {
        {"alpha_opt", sol.alpha_opt},
        {"p_C_opt_mW", sol.p_C_opt},
        {"p_C_opt_dBm", mw_to_dbm(sol.p_C_opt)},
        {"p_out_bound", sol.p_out_bound},
        {"p_out_exact",
         outage_exact(cfg.params, PowerAllocation{sol.alpha_opt, sol.p_C_opt}, cfg.targets).p_out},
        {"alpha_branch", sol.branch == AlphaBranch::InteriorRoot ? "interior_root" : "first_branch"},
        {"pc_case", sol.pc_case == PcCase::RootInside        ? "root_inside"
                    : sol.pc_case == PcCase::NoRoot_FullPower ? "no_root_full_power"
                                                              : "root_outside_full_power"},
    };
    if (cfg.grid_n) {
        const GridSolution gb = grid_search_outage(cfg.params, cfg.targets,
                                                   OutageObjective::Bound, *cfg.grid_n, *cfg.grid_n);
        const GridSolution ge = grid_search_outage(cfg.params, cfg.targets,
                                                   OutageObjective::Exact, *cfg.grid_n, *cfg.grid_n);
        summary["grid_bound"] = {{"alpha", gb.alpha}, {"p_C_mW", gb.p_C}, {"value", gb.value}};
        summary["grid_exact"] = {{"alpha", ge.alpha}, {"p_C_mW", ge.p_C}, {"value", ge.value}};
    }
    return summary;
}

json run_lambda_sweep(const ExperimentConfig& cfg, CsvBuilder& csv) {
    NetworkParams params = cfg.params;
    const std::vector<double> lambdas = cfg.lambda_sweep.values();
    if (cfg.fixed_trr_dB && cfg.lambda_sweep.to >= 1.0)
        throw ConfigError("LambdaSweep: the fixed-TRR mode requires lambda < 1");

    json summary = json::object();
    for (double beta : cfg.beta_list) {
        std::vector<double> xs, fds, hds;
        for (double lambda : lambdas) {
            params.beta = beta;
            params.lambda = lambda;
            double p = dbm_to_mw(cfg.fixed_p_C_dBm);
            if (cfg.fixed_trr_dB)
                p = trr_to_power(params, db_to_linear(*cfg.fixed_trr_dB));
            params.P_C = std::max(cfg.params.P_C, p);
            const PowerAllocation alloc{cfg.fixed_alpha, p};
            const double fd = outage_exact(params, alloc, cfg.targets).p_out;
            const double fd_bound = outage_upper_bound(params, alloc, cfg.targets);
            const double hd = hd_outage_closed_form(params, alloc, cfg.targets);
            const LinkOutage links = per_link_outage(params, alloc, cfg.targets);
            csv.row({str(beta), str(lambda), str(mw_to_dbm(p)), str(fd), str(fd_bound), str(hd),
                     str(links.uplink), str(links.d2d)});
            xs.push_back(lambda);
            fds.push_back(fd);
            hds.push_back(hd);
        }
        json cross = json::array();
        for (double lx : crossings(xs, fds, hds)) {
            params.beta = beta;
            params.lambda = lx;
            const double p = cfg.fixed_trr_dB ? trr_to_power(params, db_to_linear(*cfg.fixed_trr_dB))
                                              : dbm_to_mw(cfg.fixed_p_C_dBm);
            cross.push_back({{"lambda", lx}, {"trr_dB", linear_to_db(trr(params, p))}});
        }
        summary[format_double(beta)] = {{"crossings", cross}};
    }
    return summary;
}

json run_trr_crossover(const ExperimentConfig& cfg, CsvBuilder& csv) {
    NetworkParams params = cfg.params;
    if (params.lambda >= 1.0)
        throw ConfigError("TrrCrossover: lambda must be < 1 (the TRR inversion is undefined)");

    const std::vector<double> trrs = cfg.trr_dB_sweep.values();
    json summary = json::object();
    for (double beta : cfg.beta_list) {
        params.beta = beta;
        std::vector<double> xs, fds, hds;
        for (double trr_db : trrs) {
            const double p = trr_to_power(params, db_to_linear(trr_db));
            params.P_C = std::max(cfg.params.P_C, p); // what-if power may exceed the budget
            const PowerAllocation alloc{cfg.fixed_alpha, p};
            const double fd = outage_exact(params, alloc, cfg.targets).p_out;
            const double hd = hd_outage_closed_form(params, alloc, cfg.targets);
            csv.row({str(beta), str(trr_db), str(mw_to_dbm(p)), str(fd), str(hd)});
            xs.push_back(trr_db);
            fds.push_back(fd);
            hds.push_back(hd);
        }
        summary[format_double(beta)] = {{"crossover_trr_dB", crossings(xs, fds, hds)}};
    }
    return summary;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::vector<double> SweepRange::values() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        out.push_back(from);
        return out;
    }
    for (int i = 0; i < points; ++i)
        out.push_back(from + (to - from) * static_cast<double>(i) / (points - 1));
    return out;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    ExperimentConfig cfg;
    cfg.kind = parse_kind(require_field(j, "experiment").get<std::string>());
    cfg.seed = j.value("seed", std::uint64_t{1});
    cfg.trials = j.value("trials", std::uint64_t{100000});
    cfg.workers = j.value("workers", 0u);
    if (cfg.trials == 0)
        throw ConfigError("trials must be >= 1");
    cfg.params = parse_params(j, cfg.seed);
    if (j.contains("targets")) {
        cfg.targets.eta_B = get_num(j["targets"], "eta_B");
        cfg.targets.eta_D = get_num(j["targets"], "eta_D");
        if (!(cfg.targets.eta_B > 0.0) || !(cfg.targets.eta_D > 0.0))
            throw ConfigError("targets: eta_B and eta_D must be positive");
    }

    switch (cfg.kind) {
    case ExperimentKind::RateRegion: {
        const json& ch = require_field(j, "channel");
        cfg.channel = ChannelState{get_num(ch, "h_SB"), get_num(ch, "h_SC"), get_num(ch, "h_CB"),
                                   get_num(ch, "h_CD")};
        cfg.lambda_list = parse_list(j, "lambda_list");
        cfg.n_points = static_cast<int>(get_num_or(j, "n_points", 20));
        cfg.geometric_spacing = j.value("geometric_spacing", false);
        if (cfg.n_points < 2)
            throw ConfigError("RateRegion: n_points must be >= 2");
        break;
    }
    case ExperimentKind::OutageSweep:
        cfg.alpha_list = parse_list(j, "alpha_list");
        cfg.p_C_dBm_sweep = parse_sweep(j, "p_C_dBm_sweep");
        break;
    case ExperimentKind::MaxMinSweep:
        cfg.P_C_dBm_sweep = parse_sweep(j, "P_C_dBm_sweep");
        break;
    case ExperimentKind::OutageOptSweep:
        cfg.alpha_sweep = parse_sweep(j, "alpha_sweep");
        cfg.p_C_dBm_sweep = parse_sweep(j, "p_C_dBm_sweep");
        cfg.fixed_alpha = get_num_or(j, "fixed_alpha", cfg.fixed_alpha);
        cfg.fixed_p_C_dBm = get_num_or(j, "fixed_p_C_dBm", cfg.fixed_p_C_dBm);
        if (j.contains("grid_n"))
            cfg.grid_n = static_cast<int>(get_num(j, "grid_n"));
        break;
    case ExperimentKind::LambdaSweep:
        cfg.beta_list = parse_list(j, "beta_list");
        cfg.lambda_sweep = parse_sweep(j, "lambda_sweep");
        cfg.fixed_alpha = get_num_or(j, "alpha", cfg.fixed_alpha);
        cfg.fixed_p_C_dBm = get_num_or(j, "p_C_dBm", cfg.fixed_p_C_dBm);
        if (j.contains("trr_dB"))
            cfg.fixed_trr_dB = get_num(j, "trr_dB");
        break;
    case ExperimentKind::TrrCrossover:
        cfg.beta_list = parse_list(j, "beta_list");
        cfg.trr_dB_sweep = parse_sweep(j, "trr_dB_sweep");
        cfg.fixed_alpha = get_num_or(j, "alpha", cfg.fixed_alpha);
        break;
    }

    cfg.resolved = j;
    cfg.resolved["seed"] = cfg.seed;
    cfg.resolved["trials"] = cfg.trials;
    cfg.resolved["workers"] = cfg.workers;
    return cfg;
}

ExperimentConfig ExperimentConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return from_json(j);
}

RunOutput run_experiment(const ExperimentConfig& cfg, const std::string& out_dir) {
    static const std::map<ExperimentKind, const char*> headers = {
        {ExperimentKind::RateRegion, "lambda,R_B_target,alpha,p_C_mW,R_D"},
        {ExperimentKind::OutageSweep,
         "alpha,p_C_dBm,p_out_exact,p_out_bound,p_out_mc,p_out_mc_stderr"},
        {ExperimentKind::MaxMinSweep,
         "P_C_dBm,strategy,mean_R_B,mean_R_D,mean_R_min,mean_sum_rate"},
        {ExperimentKind::OutageOptSweep, "sweep,x,p_out_exact,p_out_bound"},
        {ExperimentKind::LambdaSweep,
         "beta,lambda,p_C_dBm,p_out_fd_exact,p_out_fd_bound,p_out_hd,p_out_uplink,p_out_d2d"},
        {ExperimentKind::TrrCrossover, "beta,trr_dB,p_C_dBm,p_out_fd,p_out_hd"},
    };

    CsvBuilder csv(headers.at(cfg.kind));
    json summary;
    switch (cfg.kind) {
    case ExperimentKind::RateRegion: summary = run_rate_region(cfg, csv); break;
    case ExperimentKind::OutageSweep: summary = run_outage_sweep(cfg, csv); break;
    case ExperimentKind::MaxMinSweep: summary = run_maxmin_sweep(cfg, csv); break;
    case ExperimentKind::OutageOptSweep: summary = run_outage_opt_sweep(cfg, csv); break;
    case ExperimentKind::LambdaSweep: summary = run_lambda_sweep(cfg, csv); break;
    case ExperimentKind::TrrCrossover: summary = run_trr_crossover(cfg, csv); break;
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory: " + out_dir);

    const std::string base = (std::filesystem::path(out_dir) / kind_name(cfg.kind)).string();
    RunOutput out{base + ".csv", base + "_meta.json"};

    json meta = {
        {"experiment", kind_name(cfg.kind)},
        {"version", kVersion},
        {"seed", cfg.seed},
        {"trials", cfg.trials},
        {"config", cfg.resolved},
        {"summary", summary},
    };
    write_file(out.csv_path, csv.text());
    write_file(out.meta_path, meta.dump(2) + "\n");
    return out;
}

} // namespace fdd2d
