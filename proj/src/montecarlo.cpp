#include "fdd2d/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fdd2d/analysis.hpp"
#include "fdd2d/maxmin.hpp"
#include "fdd2d/parallel.hpp"
#include "fdd2d/rng.hpp"

namespace fdd2d {

Estimate estimate_joint_outage(const NetworkParams& params, const PowerAllocation& alloc,
                               const QosTargets& targets, std::uint64_t trials,
                               std::uint64_t seed, unsigned workers) {
    if (trials == 0)
        throw std::invalid_argument("estimate_joint_outage: trials must be >= 1");
    const double xi_b = targets.xi_B();
    const double xi_d = targets.xi_D();

    const std::uint64_t n_blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<std::uint64_t> failures(n_blocks, 0);
    for_each_block(n_blocks, workers, [&](std::uint64_t blk) {
        const std::uint64_t begin = blk * kTrialBlock;
        const std::uint64_t end = std::min(trials, begin + kTrialBlock);
        std::uint64_t fail = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            SplitMix64 rng(derive_seed(seed, i));
            const ChannelState ch = sample_channels(params, rng);
            const SinrBundle s = sinr_bundle(params, ch, alloc);
            const bool ok = s.gamma_CB >= xi_b && s.gamma_SC >= xi_d && s.gamma_CD_C >= xi_b &&
                            s.gamma_CD_S >= xi_d;
            if (!ok)
                ++fail;
        }
        failures[blk] = fail;
    });

    std::uint64_t total = 0;
    for (std::uint64_t f : failures)
        total += f;
    const double mean = static_cast<double>(total) / static_cast<double>(trials);
    const double std_err = std::sqrt(mean * (1.0 - mean) / static_cast<double>(trials));
    return Estimate{mean, std_err, trials, seed};
}

AverageRates average_rates(const NetworkParams& params, RateStrategy strategy,
                           std::uint64_t trials, std::uint64_t seed, unsigned workers) {
    if (trials == 0)
        throw std::invalid_argument("average_rates: trials must be >= 1");

    struct Sums {
        double r_b = 0, r_d = 0, r_min = 0;
    };
    const std::uint64_t n_blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<Sums> sums(n_blocks);
    for_each_block(n_blocks, workers, [&](std::uint64_t blk) {
        const std::uint64_t begin = blk * kTrialBlock;
        const std::uint64_t end = std::min(trials, begin + kTrialBlock);
        Sums acc;
        for (std::uint64_t i = begin; i < end; ++i) {
            SplitMix64 rng(derive_seed(seed, i));
            const ChannelState ch = sample_channels(params, rng);
            // Drawn even for JOA so both strategies see identical channels.
            const double alpha_rfa = rng.uniform01();

            RateBundle r;
            if (strategy == RateStrategy::JOA) {
                const MaxMinSolution sol = solve_maxmin(params, ch);
                r = rate_bundle(params, ch, PowerAllocation{sol.alpha_star, sol.p_C_star});
            } else {
                r = rate_bundle(params, ch, PowerAllocation{alpha_rfa, params.P_C});
            }
            acc.r_b += r.R_B;
            acc.r_d += r.R_D;
            acc.r_min += r.R_min;
        }
        sums[blk] = acc;
    });

    Sums total;
    for (const Sums& s : sums) {
        total.r_b += s.r_b;
        total.r_d += s.r_d;
        total.r_min += s.r_min;
    }
    const double n = static_cast<double>(trials);
    return AverageRates{total.r_b / n, total.r_d / n, total.r_min / n,
                        (total.r_b + total.r_d) / n};
}

GridSolution grid_search_maxmin(const NetworkParams& params, const ChannelState& ch, int n_alpha,
                                int n_pc) {
    if (n_alpha < 2 || n_pc < 2)
        throw std::invalid_argument("grid_search_maxmin: grid sizes must be >= 2");

    const double i_sb = dt_bs_interference(params, ch.h_SB);
    const double p_S = dt_transmit_power(params, ch.h_SB);

    double best = -1.0;
    double best_alpha = 0.0, best_pc = 0.0;
    for (int j = 0; j < n_pc; ++j) {
        const double p = params.P_C * static_cast<double>(j) / (n_pc - 1);
        const double gamma_sc =
            p_S * ch.h_SC / (params.beta * std::pow(p, params.lambda) + params.sigma2_C);
        const double a = p * ch.h_CB;
        const double c = p * ch.h_CD / params.sigma2_D;
        for (int i = 0; i < n_alpha; ++i) {
            const double alpha = static_cast<double>(i) / (n_alpha - 1);
            const double gamma_cb = alpha * a / (i_sb + (1.0 - alpha) * a + params.sigma2_B);
            const double gamma_cds = (1.0 - alpha) * c;
            // min over the three rates equals the rate of the min SINR.
            const double m = std::min({gamma_sc, gamma_cb, gamma_cds});
            if (m > best) {
                best = m;
                best_alpha = alpha;
                best_pc = p;
            }
        }
    }
    return GridSolution{best_alpha, best_pc, rate_of(best)};
}

GridSolution grid_search_outage(const NetworkParams& params, const QosTargets& targets,
                                OutageObjective objective, int n_alpha, int n_pc) {
    if (n_alpha < 2 || n_pc < 2)
        throw std::invalid_argument("grid_search_outage: grid sizes must be >= 2");

    const double k = targets.xi_B() / (1.0 + targets.xi_B());
    double best = 2.0;
    double best_alpha = 0.0, best_pc = 0.0;
    for (int i = 0; i < n_alpha; ++i) {
        const double alpha = k + (1.0 - k) * (static_cast<double>(i) + 0.5) / n_alpha;
        for (int j = 0; j < n_pc; ++j) {
            const double p = params.P_C * static_cast<double>(j + 1) / n_pc;
            const PowerAllocation alloc{alpha, p};
            const double value = objective == OutageObjective::Exact
                                     ? outage_exact(params, alloc, targets).p_out
                                     : outage_upper_bound(params, alloc, targets);
            if (value < best) {
                best = value;
                best_alpha = alpha;
                best_pc = p;
            }
        }
    }
    return GridSolution{best_alpha, best_pc, best};
}

} // namespace fdd2d
