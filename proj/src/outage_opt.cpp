#include "fdd2d/outage_opt.hpp"

#include <algorithm>
#include <cmath>

#include "fdd2d/analysis.hpp"
#include "fdd2d/numerics.hpp"

namespace fdd2d {

namespace {

// Search cap for the stationary power: beyond the budget the case analysis
// clamps to P_C anyway.
constexpr double kRootSearchSpan = 1e3;
constexpr double kAlphaMargin = 1e-12;

} // namespace

BoundConstants bound_constants(const NetworkParams& params, const QosTargets& targets,
                               double alpha) {
    const double xi_b = targets.xi_B();
    const double xi_d = targets.xi_D();
    const double k = xi_b / (1.0 + xi_b);
    if (!(alpha > k + kAlphaMargin) || !(alpha <= 1.0 - kAlphaMargin))
        throw DegenerateInput("bound_constants: alpha must lie strictly inside the feasible band");

    const double den = alpha * (1.0 + xi_b) - xi_b;
    const double ps_atten = std::exp(-params.theta / (params.phi_SB * params.P_S));

    BoundConstants c;
    c.C = params.phi_SB * xi_d * params.beta;
    c.D = params.phi_SB * xi_d * params.sigma2_C + params.phi_SC * params.theta;
    c.E = params.phi_SC * params.theta * ps_atten;
    c.F = 1.0 - ps_atten;
    c.G = xi_d * params.beta / (params.phi_SC * params.P_S);
    c.H = xi_b * (params.theta + params.sigma2_B) / (params.phi_CB * den) +
          xi_d * params.sigma2_D / (params.phi_CD * (1.0 - alpha));
    c.I = xi_d * params.sigma2_C / (params.phi_SC * params.P_S);
    c.lambda = params.lambda;
    return c;
}

double q_value(const BoundConstants& c, double p_C) {
    const double l = c.lambda;
    const double pl = std::pow(p_C, l);
    const double p2l = pl * pl;
    const double cde = c.C * (2.0 * c.D * c.F + c.E);
    return l * c.C * c.C * c.F * c.G * p_C * pl * p2l + l * cde * c.G * p_C * p2l +
           l * (c.D * c.D * c.F * c.G + c.D * c.E * c.G + c.C * c.E) * p_C * pl -
           c.C * c.C * c.F * c.H * p2l - cde * c.H * pl - c.D * (c.D * c.F + c.E) * c.H;
}

std::pair<double, AlphaBranch> optimal_alpha(const NetworkParams& params,
                                             const QosTargets& targets) {
    const double xi_b = targets.xi_B();
    const double xi_d = targets.xi_D();

    // Up to this point the bound is decreasing in alpha outright.
    const double alpha_branch = (xi_b * xi_d + xi_b) / (xi_b * xi_d + xi_b + xi_d);

    // Beyond it the stationarity condition has a single positive root.
    const double k = xi_b / (1.0 + xi_b);
    const double m = std::sqrt(params.phi_CD * (params.theta + params.sigma2_B) * k /
                               (params.phi_CB * xi_d * params.sigma2_D));
    const double alpha_root = std::min((k + m) / (1.0 + m), 1.0 - kAlphaMargin);

    if (alpha_root > alpha_branch)
        return {alpha_root, AlphaBranch::InteriorRoot};
    return {alpha_branch, AlphaBranch::FirstBranch};
}

std::pair<double, PcCase> optimal_pc(const NetworkParams& params, const QosTargets& targets,
                                     double alpha) {
    const BoundConstants c = bound_constants(params, targets, alpha);
    auto q = [&c](double p) { return q_value(c, p); };

    const auto bracket =
        bracket_upward(q, params.P_C * 1e-12, 2.0, params.P_C * kRootSearchSpan);
    if (!bracket)
        return {params.P_C, PcCase::NoRoot_FullPower};

    const double root = bisect(q, *bracket);
    if (root > params.P_C)
        return {params.P_C, PcCase::RootOutside_FullPower};
    return {root, PcCase::RootInside};
}

OutageOptSolution solve_min_outage(const NetworkParams& params, const QosTargets& targets) {
    const auto [alpha, branch] = optimal_alpha(params, targets);
    const auto [p_c, pc_case] = optimal_pc(params, targets, alpha);
    const double bound = outage_upper_bound(params, PowerAllocation{alpha, p_c}, targets);
    return OutageOptSolution{alpha, p_c, bound, branch, pc_case};
}

} // namespace fdd2d
