#pragma once

#include <cmath>
#include <cstdint>

#include "fdd2d/errors.hpp"

// Domain types and the signal/SINR/rate layer of the cooperative full-duplex
// D2D underlay model. Node labels: B = base station, C = cellular user
// (full-duplex decode-and-forward relay), S = D2D transmitter, D = D2D
// receiver. All powers in mW, all gains linear and dimensionless, all rates
// in bit/s/Hz.

namespace fdd2d {

// Statistical description of one network drop.
struct NetworkParams {
    double phi_SB; // average power gain, DT -> BS
    double phi_SC; // average power gain, DT -> CU
    double phi_CB; // average power gain, CU -> BS
    double phi_CD; // average power gain, CU -> DR

    double sigma2_B; // noise power at the BS [mW]
    double sigma2_C; // noise power at the CU [mW]
    double sigma2_D; // noise power at the DR [mW]

    double beta;   // SIS quality: residual self-interference variance = beta * p_C^lambda [mW]
    double lambda; // SIS exponent in [0, 1]

    double theta; // interference threshold at the BS [mW]
    double P_S;   // peak transmit power of the DT [mW]
    double P_C;   // peak transmit power of the CU [mW]

    void validate() const; // throws std::invalid_argument on any violated invariant
};

// One Rayleigh fading realization; h_ij = |g_ij|^2. The S->D direct link is
// absent from the model (blocked), so it has no field here.
struct ChannelState {
    double h_SB;
    double h_SC;
    double h_CB;
    double h_CD;
};

// The decision pair: power splitting factor at the CU and its transmit power.
struct PowerAllocation {
    double alpha; // share of p_C spent on the CU's own uplink stream, in [0, 1]
    double p_C;   // CU transmit power [mW], in [0, P_C]
};

// Target rates and the induced SINR thresholds xi = 2^eta - 1. The
// thresholds are always recomputed so they can never drift from the rates.
struct QosTargets {
    double eta_B; // uplink target rate [bit/s/Hz]
    double eta_D; // D2D target rate [bit/s/Hz]

    double xi_B() const { return std::exp2(eta_B) - 1.0; }
    double xi_D() const { return std::exp2(eta_D) - 1.0; }
};

struct SinrBundle {
    double gamma_SC;   // CU decoding the DT message (suffers RSI)
    double gamma_CD_C; // DR decoding the CU uplink stream (pre-SIC)
    double gamma_CD_S; // DR decoding the relayed D2D stream (post-SIC)
    double gamma_CB;   // BS decoding the CU uplink stream
};

struct RateBundle {
    double R_B;   // cellular uplink rate
    double R_SC;  // first D2D hop (DT -> CU)
    double R_CDS; // second D2D hop (CU -> DR, after SIC)
    double R_D;   // end-to-end dual-hop D2D rate = min(R_SC, R_CDS)
    double R_min; // min(R_B, R_D)
};

inline double rate_of(double sinr) { return std::log2(1.0 + sinr); }

// One independent Rayleigh draw per link: h_ij ~ Exp(mean phi_ij).
// Deterministic for a given seed.
ChannelState sample_channels(const NetworkParams& params, std::uint64_t seed);

class SplitMix64;
// Same draw taken from a live stream (four variates, order SB, SC, CB, CD).
ChannelState sample_channels(const NetworkParams& params, SplitMix64& rng);

// Truncated channel-inverse power control at the DT: min(theta / h_SB, P_S).
// Saturates at P_S as h_SB -> 0.
double dt_transmit_power(const NetworkParams& params, double h_SB);

// Interference the DT causes at the BS, p_S * h_SB = min(theta, P_S * h_SB).
// Computed in this form so the threshold branch is exact in floating point.
double dt_bs_interference(const NetworkParams& params, double h_SB);

// Residual self-interference variance beta * p_C^lambda, with 0^0 := 1 so
// the constant-RSI case (lambda = 0) is continuous at p_C = 0.
double rsi_variance(const NetworkParams& params, double p_C);

// Transmit-power-to-RSI ratio p_C / (beta * p_C^lambda) = p_C^(1-lambda)/beta.
// Throws DegenerateInput for p_C = 0 or beta = 0.
double trr(const NetworkParams& params, double p_C);

// Inverse of trr() for lambda < 1: p_C = (TRR * beta)^(1/(1-lambda)).
// Throws DegenerateInput at lambda = 1 where the inversion is undefined.
double trr_to_power(const NetworkParams& params, double trr_value);

SinrBundle sinr_bundle(const NetworkParams& params, const ChannelState& ch,
                       const PowerAllocation& alloc);

RateBundle rate_bundle(const NetworkParams& params, const ChannelState& ch,
                       const PowerAllocation& alloc);

} // namespace fdd2d
