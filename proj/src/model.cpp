#include "fdd2d/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fdd2d/rng.hpp"

namespace fdd2d {

namespace {

void require(bool ok, const char* what) {
    if (!ok)
        throw std::invalid_argument(std::string("NetworkParams: ") + what);
}

} // namespace

void NetworkParams::validate() const {
    require(phi_SB > 0 && std::isfinite(phi_SB), "phi_SB must be positive");
    require(phi_SC > 0 && std::isfinite(phi_SC), "phi_SC must be positive");
    require(phi_CB > 0 && std::isfinite(phi_CB), "phi_CB must be positive");
    require(phi_CD > 0 && std::isfinite(phi_CD), "phi_CD must be positive");
    require(sigma2_B > 0 && std::isfinite(sigma2_B), "sigma2_B must be positive");
    require(sigma2_C > 0 && std::isfinite(sigma2_C), "sigma2_C must be positive");
    require(sigma2_D > 0 && std::isfinite(sigma2_D), "sigma2_D must be positive");
    require(beta >= 0 && std::isfinite(beta), "beta must be >= 0");
    require(lambda >= 0 && lambda <= 1, "lambda must lie in [0, 1]");
    require(theta > 0 && std::isfinite(theta), "theta must be positive");
    require(P_S > 0 && std::isfinite(P_S), "P_S must be positive");
    require(P_C > 0 && std::isfinite(P_C), "P_C must be positive");
}

ChannelState sample_channels(const NetworkParams& params, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return sample_channels(params, rng);
}

ChannelState sample_channels(const NetworkParams& params, SplitMix64& rng) {
    ChannelState ch;
    ch.h_SB = rng.exponential(params.phi_SB);
    ch.h_SC = rng.exponential(params.phi_SC);
    ch.h_CB = rng.exponential(params.phi_CB);
    ch.h_CD = rng.exponential(params.phi_CD);
    return ch;
}

double dt_transmit_power(const NetworkParams& params, double h_SB) {
    if (h_SB <= 0.0)
        return params.P_S; // min(theta/h, P_S) saturates as h -> 0
    return std::min(params.theta / h_SB, params.P_S);
}

double dt_bs_interference(const NetworkParams& params, double h_SB) {
    return std::min(params.theta, params.P_S * h_SB);
}

double rsi_variance(const NetworkParams& params, double p_C) {
    // std::pow(0, 0) == 1, which is exactly the convention wanted here.
    return params.beta * std::pow(p_C, params.lambda);
}

double trr(const NetworkParams& params, double p_C) {
    if (p_C <= 0.0 || params.beta <= 0.0)
        throw DegenerateInput("trr: requires p_C > 0 and beta > 0");
    return std::pow(p_C, 1.0 - params.lambda) / params.beta;
}

double trr_to_power(const NetworkParams& params, double trr_value) {
    if (params.lambda >= 1.0)
        throw DegenerateInput("trr_to_power: inversion undefined at lambda = 1");
    if (trr_value <= 0.0 || params.beta <= 0.0)
        throw DegenerateInput("trr_to_power: requires TRR > 0 and beta > 0");
    return std::pow(trr_value * params.beta, 1.0 / (1.0 - params.lambda));
}

SinrBundle sinr_bundle(const NetworkParams& params, const ChannelState& ch,
                       const PowerAllocation& alloc) {
    const double p_S = dt_transmit_power(params, ch.h_SB);
    const double rsi = rsi_variance(params, alloc.p_C);
    const double i_sb = dt_bs_interference(params, ch.h_SB);

    SinrBundle s;
    s.gamma_SC = p_S * ch.h_SC / (rsi + params.sigma2_C);
    const double own = alloc.alpha * alloc.p_C * ch.h_CD;
    const double relayed = (1.0 - alloc.alpha) * alloc.p_C * ch.h_CD;
    s.gamma_CD_C = own / (relayed + params.sigma2_D);
    s.gamma_CD_S = relayed / params.sigma2_D;
    s.gamma_CB = alloc.alpha * alloc.p_C * ch.h_CB /
                 (i_sb + (1.0 - alloc.alpha) * alloc.p_C * ch.h_CB + params.sigma2_B);
    return s;
}

RateBundle rate_bundle(const NetworkParams& params, const ChannelState& ch,
                       const PowerAllocation& alloc) {
    const SinrBundle s = sinr_bundle(params, ch, alloc);
    RateBundle r;
    r.R_B = rate_of(s.gamma_CB);
    r.R_SC = rate_of(s.gamma_SC);
    r.R_CDS = rate_of(s.gamma_CD_S);
    r.R_D = std::min(r.R_SC, r.R_CDS);
    r.R_min = std::min(r.R_B, r.R_D);
    return r;
}

} // namespace fdd2d
