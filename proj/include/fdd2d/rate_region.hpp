#pragma once

#include <vector>

#include "fdd2d/model.hpp"

// Pareto boundary of the (uplink rate, D2D rate) region for one channel
// realization: for each uplink-rate target the allocation maximizing the
// dual-hop D2D rate subject to meeting the target exactly.

namespace fdd2d {

struct ParetoPoint {
    double R_B_target; // uplink rate pinned by the equality constraint [bit/s/Hz]
    double alpha;      // splitting factor achieving it
    double p_C;        // CU power achieving it [mW]
    double R_D;        // resulting dual-hop D2D rate [bit/s/Hz]
};

// Uplink rate at full power with every watt on the uplink stream.
double max_uplink_rate(const NetworkParams& params, const ChannelState& ch);

// One boundary point. Throws InfeasibleTarget when the requested rate
// exceeds max_uplink_rate beyond solver tolerance.
ParetoPoint pareto_point(const NetworkParams& params, const ChannelState& ch, double R_B_target);

enum class BoundarySpacing {
    Uniform,   // equal steps in R_B_target
    Geometric, // steps shrink toward R_B_max, resolving the steep end
};

std::vector<ParetoPoint> pareto_boundary(const NetworkParams& params, const ChannelState& ch,
                                         int n_points,
                                         BoundarySpacing spacing = BoundarySpacing::Uniform);

} // namespace fdd2d
