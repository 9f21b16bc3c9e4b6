#include "fdd2d/maxmin.hpp"

#include <algorithm>
#include <cmath>

#include "fdd2d/numerics.hpp"

namespace fdd2d {

namespace {

// Power the CU diverts to the relayed stream when alpha = alpha_bar(p):
// (1 - alpha_bar) * p, a nonincreasing function of p.
double relay_power(const NetworkParams& params, const ChannelState& ch, double p_S, double p) {
    const double rsi = params.beta * std::pow(p, params.lambda);
    return params.sigma2_D * p_S * ch.h_SC / ((rsi + params.sigma2_C) * ch.h_CD);
}

// Uplink SINR along the alpha = alpha_bar(p) ridge.
double gamma_cb_on_ridge(const NetworkParams& params, const ChannelState& ch, double p_S,
                         double p) {
    const double w = relay_power(params, ch, p_S, p);
    const double i_sb = dt_bs_interference(params, ch.h_SB);
    const double own = std::max(p - w, 0.0);
    return own * ch.h_CB / (i_sb + w * ch.h_CB + params.sigma2_B);
}

} // namespace

double pc_bar(const NetworkParams& params, const ChannelState& ch) {
    const double p_S = dt_transmit_power(params, ch.h_SB);
    const double drive = params.sigma2_D * p_S * ch.h_SC;
    if (ch.h_CD <= 0.0 || p_S * ch.h_SC <= 0.0)
        throw DegenerateChannel("pc_bar: requires h_CD > 0 and p_S h_SC > 0");

    // F2 rises from -drive through the unique root, which cannot exceed the
    // beta = 0 closed form drive / (h_CD sigma_C^2).
    const double hi = drive / (ch.h_CD * params.sigma2_C);
    auto f2 = [&](double x) {
        const double rsi = params.beta * std::pow(x, params.lambda);
        return ch.h_CD * (rsi + params.sigma2_C) * x - drive;
    };
    return bisect(f2, Interval{0.0, hi}, 1e-15);
}

double alpha_bar(const NetworkParams& params, const ChannelState& ch, double p_C) {
    const double p_S = dt_transmit_power(params, ch.h_SB);
    return 1.0 - relay_power(params, ch, p_S, p_C) / p_C;
}

MaxMinSolution solve_maxmin(const NetworkParams& params, const ChannelState& ch) {
    const double p_S = dt_transmit_power(params, ch.h_SB);

    if (ch.h_CD <= 0.0 || p_S * ch.h_SC <= 0.0) {
        // The D2D link carries nothing; hand the budget to the uplink.
        const PowerAllocation alloc{1.0, params.P_C};
        return MaxMinSolution{1.0, params.P_C, rate_bundle(params, ch, alloc).R_min,
                              MaxMinCase::Degenerate};
    }

    const double pbar = pc_bar(params, ch);
    double alpha_star, p_star;
    MaxMinCase taken;

    // Full-power split balancing the uplink against the second hop.
    auto f4 = [&](double a) {
        const RateBundle r = rate_bundle(params, ch, PowerAllocation{a, params.P_C});
        return r.R_B - r.R_CDS;
    };

    if (pbar < params.P_C) {
        // First hop at least as fast as the second on [pbar, P_C]; ride the
        // alpha_bar ridge and balance the uplink against the first hop.
        auto f3 = [&](double p) {
            const double gamma_sc = p_S * ch.h_SC /
                                    (params.beta * std::pow(p, params.lambda) + params.sigma2_C);
            return rate_of(gamma_cb_on_ridge(params, ch, p_S, p)) - rate_of(gamma_sc);
        };
        const double f_lo = f3(pbar);
        const double f_hi = f3(params.P_C);
        if (f_lo >= 0.0) {
            // Only reachable when the first hop carries no rate at all.
            p_star = pbar;
            alpha_star = std::clamp(alpha_bar(params, ch, pbar), 0.0, 1.0);
            taken = MaxMinCase::Case1_LimitedBySC;
        } else if (f_hi <= 0.0) {
            // The budget binds before the uplink catches the first hop.
            // With p pinned at P_C the objective keeps growing in alpha past
            // alpha_bar(P_C) until the uplink meets the second hop, so the
            // split rebalances against R_CD,S; the first hop retains slack.
            p_star = params.P_C;
            alpha_star = bisect(f4, Interval{0.0, 1.0}, 1e-15);
            taken = MaxMinCase::Case1_LimitedByB;
        } else {
            p_star = bisect(f3, Interval{pbar, params.P_C}, 1e-15);
            alpha_star = std::clamp(alpha_bar(params, ch, p_star), 0.0, 1.0);
            taken = MaxMinCase::Case1_Balanced;
        }
    } else {
        // Budget cannot reach the hop balance: full power, split in alpha so
        // the uplink and the second hop meet.
        p_star = params.P_C;
        alpha_star = bisect(f4, Interval{0.0, 1.0}, 1e-15);
        taken = MaxMinCase::Case2_Balanced;
    }

    const RateBundle r = rate_bundle(params, ch, PowerAllocation{alpha_star, p_star});
    return MaxMinSolution{alpha_star, p_star, r.R_min, taken};
}

} // namespace fdd2d
