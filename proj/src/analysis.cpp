#include "fdd2d/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fdd2d/parallel.hpp"
#include "fdd2d/rng.hpp"

namespace fdd2d {

namespace {

// exp with sub-denormal arguments flushed to zero; outage sweeps multiply
// several of these and must not accumulate denormal noise.
double safe_exp(double x) { return x <= -745.0 ? 0.0 : std::exp(x); }

// 1 - exp(-x) without cancellation for tiny x.
double one_minus_exp_neg(double x) { return -std::expm1(-x); }

// Success-probability factors conditioned on alpha > xi_B / (1 + xi_B).
struct Factors {
    double q1;        // P{BS ok | h_SB above cutoff} (interference pinned at theta)
    double q2;        // P{first hop ok, h_SB above cutoff}
    double q3;        // P{first hop ok | h_SB below cutoff}
    double q4;        // P{BS ok, h_SB below cutoff}
    double p3;        // P{DR decodes both streams}
    double sat_prob;  // P{h_SB below cutoff} = 1 - exp(-theta/(phi_SB P_S))
};

Factors compute_factors(const NetworkParams& params, const PowerAllocation& alloc,
                        const QosTargets& targets) {
    const double xi_b = targets.xi_B();
    const double xi_d = targets.xi_D();
    const double den = alloc.alpha * (1.0 + xi_b) - xi_b; // > 0 on this branch
    const double p = alloc.p_C;

    const double v = xi_d * (rsi_variance(params, p) + params.sigma2_C);
    const double b = params.theta / (params.phi_SB * params.P_S);
    const double t = params.phi_CB * p * den;

    Factors f;
    f.sat_prob = one_minus_exp_neg(b);
    f.q1 = safe_exp(-xi_b * (params.theta + params.sigma2_B) / t);
    f.q2 = params.phi_SC * params.theta * safe_exp(-v / (params.phi_SC * params.P_S) - b) /
           (params.phi_SB * v + params.phi_SC * params.theta);
    f.q3 = safe_exp(-v / (params.phi_SC * params.P_S));
    f.q4 = (t / (params.phi_SB * xi_b * params.P_S + t)) * safe_exp(-xi_b * params.sigma2_B / t) *
           one_minus_exp_neg(xi_b * params.theta / t + b);

    // DR side: the SIC prerequisite dominates up to the branch point, the
    // relayed stream beyond it; the two expressions agree at the boundary.
    const double alpha_mid = (xi_b * xi_d + xi_b) / (xi_b * xi_d + xi_b + xi_d);
    if (alloc.alpha <= alpha_mid) {
        f.p3 = safe_exp(-xi_b * params.sigma2_D / (params.phi_CD * p * den));
    } else {
        f.p3 = safe_exp(-xi_d * params.sigma2_D / (params.phi_CD * p * (1.0 - alloc.alpha)));
    }
    return f;
}

bool alpha_below_cutoff(const PowerAllocation& alloc, const QosTargets& targets) {
    const double xi_b = targets.xi_B();
    return alloc.alpha <= xi_b / (1.0 + xi_b);
}

void check_power(const PowerAllocation& alloc) {
    if (alloc.p_C <= 0.0)
        throw DegenerateInput("joint outage closed form requires p_C > 0");
}

} // namespace

OutageBreakdown outage_exact(const NetworkParams& params, const PowerAllocation& alloc,
                             const QosTargets& targets) {
    if (alpha_below_cutoff(alloc, targets))
        return OutageBreakdown{0.0, 0.0, 1.0, 1.0};
    check_power(alloc);
    const Factors f = compute_factors(params, alloc, targets);
    OutageBreakdown out;
    out.P1 = f.q1 * f.q2;
    out.P2 = f.q3 * f.q4;
    out.P3 = f.p3;
    out.p_out = 1.0 - (out.P1 + out.P2) * out.P3;
    return out;
}

double outage_upper_bound(const NetworkParams& params, const PowerAllocation& alloc,
                          const QosTargets& targets) {
    if (alpha_below_cutoff(alloc, targets))
        return 1.0;
    check_power(alloc);
    const Factors f = compute_factors(params, alloc, targets);
    // Worst-case interference pins the DT term at theta also below the
    // cutoff, which substitutes q1 * sat_prob for q4.
    const double p2_bound = f.q3 * f.q1 * f.sat_prob;
    return 1.0 - (f.q1 * f.q2 + p2_bound) * f.p3;
}

double outage_asymptotic(const NetworkParams& params, const QosTargets& targets, double p_C) {
    const double b = params.theta / (params.phi_SB * params.P_S);
    const double rsi = rsi_variance(params, p_C);
    return 1.0 - one_minus_exp_neg(b) *
                     safe_exp(-targets.xi_D() * rsi / (params.phi_SC * params.P_S));
}

LinkOutage per_link_outage(const NetworkParams& params, const PowerAllocation& alloc,
                           const QosTargets& targets) {
    if (alpha_below_cutoff(alloc, targets))
        return LinkOutage{1.0, 1.0};
    check_power(alloc);
    const Factors f = compute_factors(params, alloc, targets);
    const double uplink_ok = f.q1 * (1.0 - f.sat_prob) + f.q4;
    const double d2d_ok = (f.q2 + f.q3 * f.sat_prob) * f.p3;
    return LinkOutage{1.0 - uplink_ok, 1.0 - d2d_ok};
}

NetworkParams hd_equivalent_params(const NetworkParams& params) {
    NetworkParams hd = params;
    hd.beta = 0.0;
    return hd;
}

QosTargets hd_equivalent_targets(const QosTargets& targets) {
    return QosTargets{2.0 * targets.eta_B, 2.0 * targets.eta_D};
}

double hd_outage_closed_form(const NetworkParams& params, const PowerAllocation& alloc,
                             const QosTargets& targets) {
    return outage_exact(hd_equivalent_params(params), alloc, hd_equivalent_targets(targets)).p_out;
}

double hd_baseline_outage(const NetworkParams& params, const PowerAllocation& alloc,
                          const QosTargets& targets, std::uint64_t trials, std::uint64_t seed,
                          unsigned workers) {
    const NetworkParams hd = hd_equivalent_params(params);
    const QosTargets hdq = hd_equivalent_targets(targets);
    const double xi_b = hdq.xi_B();
    const double xi_d = hdq.xi_D();

    const std::uint64_t n_blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<std::uint64_t> failures(n_blocks, 0);
    for_each_block(n_blocks, workers, [&](std::uint64_t blk) {
        const std::uint64_t begin = blk * kTrialBlock;
        const std::uint64_t end = std::min(trials, begin + kTrialBlock);
        std::uint64_t fail = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const ChannelState ch = sample_channels(hd, derive_seed(seed, i));
            const SinrBundle s = sinr_bundle(hd, ch, alloc);
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
    return static_cast<double>(total) / static_cast<double>(trials);
}

} // namespace fdd2d
