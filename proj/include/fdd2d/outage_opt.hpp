#pragma once

#include <utility>

#include "fdd2d/model.hpp"

// Statistical-CSI power allocation minimizing the upper bound of the joint
// outage probability. The splitting factor and the CU power decouple: alpha
// comes from a two-branch stationarity analysis, p_C from the sole positive
// root of a generalized polynomial.

namespace fdd2d {

enum class AlphaBranch {
    FirstBranch,  // bound still decreasing at the branch point; take it
    InteriorRoot, // stationary point of the second branch
};

enum class PcCase {
    NoRoot_FullPower,      // bound monotone decreasing in p_C
    RootOutside_FullPower, // stationary power beyond the budget
    RootInside,            // interior stationary power
};

struct OutageOptSolution {
    double alpha_opt;
    double p_C_opt;
    double p_out_bound; // upper-bound value at the solution
    AlphaBranch branch;
    PcCase pc_case;
};

// Constants of the bound seen as a function of p_C at a fixed alpha:
// bound = 1 - j(p) k(p) with j = E/(C p^lambda + D) + F and
// k = exp(-(G p^(1+lambda) + H)/p - I).
struct BoundConstants {
    double C, D, E, F, G, H, I;
    double lambda;
};

BoundConstants bound_constants(const NetworkParams& params, const QosTargets& targets,
                               double alpha);

// Stationarity polynomial Q(p_C); the bound decreases while Q < 0 and
// increases once Q > 0. Q(0) < 0 always, and the coefficient signs allow at
// most one positive root.
double q_value(const BoundConstants& c, double p_C);

// max of the branch-point candidate and the interior stationary point.
std::pair<double, AlphaBranch> optimal_alpha(const NetworkParams& params,
                                             const QosTargets& targets);

// Positive root of Q within the budget, else full power.
std::pair<double, PcCase> optimal_pc(const NetworkParams& params, const QosTargets& targets,
                                     double alpha);

OutageOptSolution solve_min_outage(const NetworkParams& params, const QosTargets& targets);

} // namespace fdd2d
