#pragma once

#include "fdd2d/model.hpp"

// Max-min fair power allocation for one channel realization: the (alpha, p_C)
// maximizing min(uplink rate, dual-hop D2D rate). The bottleneck structure
// splits on whether the first-hop/second-hop balance power pc_bar fits the
// power budget.

namespace fdd2d {

enum class MaxMinCase {
    Case1_LimitedBySC, // first hop caps the objective; minimum power wins
    Case1_Balanced,    // uplink and first hop balanced at an interior power
    Case1_LimitedByB,  // budget binds; uplink rebalanced against the second hop
    Case2_Balanced,    // budget-bound power, uplink and second hop balanced in alpha
    Degenerate,        // D2D link unservable (dead first or second hop)
};

struct MaxMinSolution {
    double alpha_star;
    double p_C_star;
    double R_min_star;
    MaxMinCase case_taken;
};

// The CU power at which the two D2D hops balance when the whole CU power is
// spent relaying: unique positive root of
//   h_CD beta x^(1+lambda) + h_CD sigma_C^2 x - sigma_D^2 p_S h_SC = 0.
// Throws DegenerateChannel when h_CD = 0 or p_S h_SC = 0.
double pc_bar(const NetworkParams& params, const ChannelState& ch);

// Largest splitting factor keeping the second hop at least as fast as the
// first at power p_C: 1 - sigma_D^2 p_S h_SC / ((beta p_C^lambda + sigma_C^2) p_C h_CD).
double alpha_bar(const NetworkParams& params, const ChannelState& ch, double p_C);

MaxMinSolution solve_maxmin(const NetworkParams& params, const ChannelState& ch);

} // namespace fdd2d
