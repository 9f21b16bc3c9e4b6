#pragma once

#include <cstdint>

#include "fdd2d/model.hpp"

// Stochastic and brute-force oracles: joint-outage estimation from the event
// definition, average achieved rates under the two power-allocation
// strategies, and exhaustive grid searches backing both optimizers. Every
// estimator is bit-reproducible for a fixed (seed, trials) pair regardless
// of worker count (counter-based per-trial seeding, fixed-order block
// reduction).

namespace fdd2d {

struct Estimate {
    double mean;
    double std_err; // sqrt(mean (1-mean) / trials) for Bernoulli estimands
    std::uint64_t trials;
    std::uint64_t seed;
};

// Fraction of fading draws in which the BS or the DR misses its target:
// success requires gamma_CB >= xi_B, gamma_SC >= xi_D, gamma_CD_C >= xi_B
// and gamma_CD_S >= xi_D simultaneously.
Estimate estimate_joint_outage(const NetworkParams& params, const PowerAllocation& alloc,
                               const QosTargets& targets, std::uint64_t trials,
                               std::uint64_t seed, unsigned workers = 0);

enum class RateStrategy {
    JOA, // joint optimization: solve_maxmin on each draw
    RFA, // random alpha, full power
};

struct AverageRates {
    double R_B;
    double R_D;
    double R_min;
    double sum_rate;
};

// Mean achieved rates over fading draws. The two strategies consume the
// same per-trial channel realizations for a given seed, so comparisons are
// paired.
AverageRates average_rates(const NetworkParams& params, RateStrategy strategy,
                           std::uint64_t trials, std::uint64_t seed, unsigned workers = 0);

struct GridSolution {
    double alpha;
    double p_C;
    double value;
};

// Exhaustive max of R_min over the closed grid [0,1] x [0,P_C].
GridSolution grid_search_maxmin(const NetworkParams& params, const ChannelState& ch,
                                int n_alpha, int n_pc);

enum class OutageObjective { Exact, Bound };

// Exhaustive min of the joint outage (exact or bound) over
// (xi_B/(1+xi_B), 1] x (0, P_C]; alpha is inset from the open boundary by
// half a grid step, where the objective degenerates to 1.
GridSolution grid_search_outage(const NetworkParams& params, const QosTargets& targets,
                                OutageObjective objective, int n_alpha, int n_pc);

} // namespace fdd2d
