#include "fdd2d/rate_region.hpp"

#include <algorithm>
#include <cmath>

#include "fdd2d/maxmin.hpp"
#include "fdd2d/numerics.hpp"

namespace fdd2d {

namespace {

constexpr double kTargetSlack = 1e-9;

// Balance function for the pinned-uplink problem, as a generalized
// polynomial in the CU power x (exponents 1, lambda, 1 + lambda):
//
//   F1(x) = u h_CD h_CB beta x^(1+lambda) + u h_CD h_CB sigma_C^2 x
//         - (1-u) A h_CD beta x^lambda - (1-u) A h_CD sigma_C^2
//         - p_S h_SC sigma_D^2 h_CB,            u = 2^(-R_B_target)
//
// with A the BS-side interference-plus-noise. F1 < 0 means the first hop
// outruns the second (raise power), F1 > 0 the reverse; the root balances
// the two hops at the pinned uplink rate.
struct BalanceF1 {
    double u, one_minus_u, A, first_hop;
    const NetworkParams& params;
    const ChannelState& ch;

    double operator()(double x) const {
        const double rsi = params.beta * std::pow(x, params.lambda);
        return u * ch.h_CD * ch.h_CB * (rsi * x + params.sigma2_C * x) -
               one_minus_u * A * ch.h_CD * (rsi + params.sigma2_C) -
               first_hop * params.sigma2_D * ch.h_CB;
    }
};

} // namespace

double max_uplink_rate(const NetworkParams& params, const ChannelState& ch) {
    const double A = dt_bs_interference(params, ch.h_SB) + params.sigma2_B;
    return rate_of(params.P_C * ch.h_CB / A);
}

ParetoPoint pareto_point(const NetworkParams& params, const ChannelState& ch, double R_B_target) {
    const double p_S = dt_transmit_power(params, ch.h_SB);
    const double A = dt_bs_interference(params, ch.h_SB) + params.sigma2_B;
    const double r_max = max_uplink_rate(params, ch);

    if (R_B_target > r_max + kTargetSlack)
        throw InfeasibleTarget("pareto_point: R_B_target exceeds the maximum uplink rate");
    const double target = std::clamp(R_B_target, 0.0, r_max);

    if (ch.h_CB <= 0.0) {
        // Dead uplink: the region collapses to R_B = 0, so the boundary point
        // is the power split maximizing the D2D rate alone.
        double p = params.P_C;
        if (ch.h_CD > 0.0 && p_S * ch.h_SC > 0.0)
            p = std::min(pc_bar(params, ch), params.P_C);
        const RateBundle r = rate_bundle(params, ch, PowerAllocation{0.0, p});
        return ParetoPoint{0.0, 0.0, p, r.R_D};
    }

    const double u = std::exp2(-target);
    const double one_minus_u = -std::expm1(-target * M_LN2); // 1 - 2^-target, no cancellation
    const double p_lo = std::min(A * one_minus_u / (u * ch.h_CB), params.P_C);

    const BalanceF1 f1{u, one_minus_u, A, p_S * ch.h_SC, params, ch};

    double p_c;
    if (p_lo >= params.P_C) {
        p_c = params.P_C; // target pinned at R_B_max, nothing left to relay
    } else if (f1(p_lo) >= 0.0) {
        p_c = p_lo; // first hop already the bottleneck: minimum power
    } else if (f1(params.P_C) <= 0.0) {
        p_c = params.P_C; // second hop the bottleneck everywhere: full power
    } else {
        p_c = bisect(f1, Interval{p_lo, params.P_C}, 1e-15);
    }

    const double alpha = std::clamp(one_minus_u * (1.0 + A / (p_c * ch.h_CB)), 0.0, 1.0);
    const RateBundle r = rate_bundle(params, ch, PowerAllocation{alpha, p_c});
    return ParetoPoint{target, alpha, p_c, r.R_D};
}

std::vector<ParetoPoint> pareto_boundary(const NetworkParams& params, const ChannelState& ch,
                                         int n_points, BoundarySpacing spacing) {
    if (n_points < 2)
        throw std::invalid_argument("pareto_boundary: need at least 2 points");
    const double r_max = max_uplink_rate(params, ch);

    std::vector<ParetoPoint> boundary;
    boundary.reserve(static_cast<std::size_t>(n_points));
    constexpr double q = 0.75; // Geometric: step ratio toward R_B_max
    const double geo_norm = 1.0 - std::pow(q, n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        double target;
        if (spacing == BoundarySpacing::Uniform) {
            target = r_max * static_cast<double>(i) / (n_points - 1);
        } else {
            target = r_max * (1.0 - std::pow(q, i)) / geo_norm;
        }
        boundary.push_back(pareto_point(params, ch, target));
    }
    return boundary;
}

} // namespace fdd2d
