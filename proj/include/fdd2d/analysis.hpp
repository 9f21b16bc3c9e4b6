#pragma once

#include <cstdint>

#include "fdd2d/model.hpp"

// Closed-form joint outage probability of the cellular uplink and the
// dual-hop D2D link under Rayleigh fading, its worst-case-interference upper
// bound, the large-power asymptote, per-link outage splits, and the
// half-duplex benchmark.

namespace fdd2d {

// The three factors of the joint success probability:
//   P1 covers {BS ok, first hop ok, h_SB above the power-control cutoff},
//   P2 covers {BS ok, first hop ok, h_SB below the cutoff},
//   P3 covers {DR decodes both streams}.
// p_out = 1 - (P1 + P2) * P3 for alpha above xi_B/(1+xi_B), else 1.
struct OutageBreakdown {
    double P1;
    double P2;
    double P3;
    double p_out;
};

OutageBreakdown outage_exact(const NetworkParams& params, const PowerAllocation& alloc,
                             const QosTargets& targets);

// Replaces the DT interference at the BS by its cap theta on the saturated
// power-control branch; always >= outage_exact, and tight when
// theta / P_S is small.
double outage_upper_bound(const NetworkParams& params, const PowerAllocation& alloc,
                          const QosTargets& targets);

// Limit of the joint outage probability as the CU power grows, evaluated at
// a nominal p_C (the RSI term beta * p_C^lambda survives). Independent of
// alpha. For lambda > 0 it tends to 1; for lambda = 0 it is the outage
// floor, including the constant RSI attenuation exp(-xi_D beta/(phi_SC P_S)).
double outage_asymptotic(const NetworkParams& params, const QosTargets& targets, double p_C);

// Marginal outage of the cellular uplink (BS fails to decode) and of the
// dual-hop D2D link (either hop or the SIC prerequisite fails).
struct LinkOutage {
    double uplink;
    double d2d;
};

LinkOutage per_link_outage(const NetworkParams& params, const PowerAllocation& alloc,
                           const QosTargets& targets);

// Half-duplex benchmark: identical topology, power control and decoding
// orders, the two phases separated in time so there is no self-interference
// (beta = 0), and each link needs twice the spectral efficiency to deliver
// the same rate (thresholds 2^(2 eta) - 1).
NetworkParams hd_equivalent_params(const NetworkParams& params);
QosTargets hd_equivalent_targets(const QosTargets& targets);

double hd_outage_closed_form(const NetworkParams& params, const PowerAllocation& alloc,
                             const QosTargets& targets);

// Monte Carlo estimate of the HD benchmark outage; deterministic in
// (seed, trials) for any worker count.
double hd_baseline_outage(const NetworkParams& params, const PowerAllocation& alloc,
                          const QosTargets& targets, std::uint64_t trials, std::uint64_t seed,
                          unsigned workers = 0);

} // namespace fdd2d
