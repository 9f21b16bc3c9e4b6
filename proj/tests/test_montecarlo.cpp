#include <doctest.h>

#include <cmath>
#include <vector>

#include "fdd2d/analysis.hpp"
#include "fdd2d/montecarlo.hpp"
#include "fdd2d/rng.hpp"
#include "test_util.hpp"

using namespace fdd2d;

TEST_CASE("estimator is bit-identical across worker counts and repeat runs") {
    const NetworkParams p = testutil::sweep_params();
    const QosTargets t{1.0, 1.0};
    const PowerAllocation a{0.7, 10.0};

    const Estimate e1 = estimate_joint_outage(p, a, t, 100001, 42, 1);
    const Estimate e4 = estimate_joint_outage(p, a, t, 100001, 42, 4);
    const Estimate e1b = estimate_joint_outage(p, a, t, 100001, 42, 1);
    CHECK(e1.mean == e4.mean);
    CHECK(e1.mean == e1b.mean);
    CHECK(e1.std_err == e4.std_err);

    const AverageRates r1 = average_rates(p, RateStrategy::JOA, 20001, 7, 1);
    const AverageRates r4 = average_rates(p, RateStrategy::JOA, 20001, 7, 4);
    CHECK(r1.R_B == r4.R_B);
    CHECK(r1.R_D == r4.R_D);
    CHECK(r1.R_min == r4.R_min);
    CHECK(r1.sum_rate == r4.sum_rate);
}

TEST_CASE("outage estimate is exactly one below the splitting cutoff") {
    const NetworkParams p = testutil::sweep_params();
    const QosTargets t{1.0, 1.0};
    const Estimate e = estimate_joint_outage(p, {0.5, 10.0}, t, 20000, 1, 2);
    CHECK(e.mean == 1.0);
    CHECK(e.std_err == 0.0);
}

TEST_CASE("outage estimate vanishes as the targets do") {
    const NetworkParams p = testutil::sweep_params();
    const QosTargets t{1e-9, 1e-9};
    const Estimate e = estimate_joint_outage(p, {0.5, 100.0}, t, 20000, 1, 2);
    CHECK(e.mean <= 0.01);
}

TEST_CASE("estimate matches the closed form at 3 standard errors") {
    const NetworkParams p = testutil::sweep_params();
    const QosTargets t{1.0, 1.0};
    std::uint64_t seed = 5;
    for (double alpha : {0.65, 0.8}) {
        for (double pc : {0.5, 20.0, 700.0}) {
            const PowerAllocation a{alpha, pc};
            const double exact = outage_exact(p, a, t).p_out;
            const Estimate e = estimate_joint_outage(p, a, t, 250000, seed++, 2);
            CHECK(std::abs(e.mean - exact) <= 3.0 * e.std_err + 1e-9);
        }
    }
}

TEST_CASE("error shrinks like one over the square root of the trial count") {
    const NetworkParams p = testutil::sweep_params();
    const QosTargets t{1.0, 1.0};
    const PowerAllocation a{0.7, 10.0};
    const double exact = outage_exact(p, a, t).p_out;

    const std::vector<std::uint64_t> sizes{20000, 80000, 320000};
    std::vector<double> rms;
    for (std::uint64_t n : sizes) {
        double sq = 0.0;
        const int reps = 24;
        for (int r = 0; r < reps; ++r) {
            const Estimate e = estimate_joint_outage(p, a, t, n, 1000 + r, 2);
            sq += (e.mean - exact) * (e.mean - exact);
        }
        rms.push_back(std::sqrt(sq / reps));
    }
    // Quadrupling the trials should halve the RMS error, up to sampling noise.
    CHECK(rms[0] / rms[1] == doctest::Approx(2.0).epsilon(0.6));
    CHECK(rms[1] / rms[2] == doctest::Approx(2.0).epsilon(0.6));
}

TEST_CASE("paired JOA/RFA rate averages favor the optimizer") {
    NetworkParams p = testutil::sweep_params();
    for (double budget_dbm : {0.0, 15.0, 30.0}) {
        p.P_C = dbm_to_mw(budget_dbm);
        const AverageRates joa = average_rates(p, RateStrategy::JOA, 4000, 99, 2);
        const AverageRates rfa = average_rates(p, RateStrategy::RFA, 4000, 99, 2);
        CHECK(joa.R_min > rfa.R_min);
        CHECK(joa.sum_rate == doctest::Approx(joa.R_B + joa.R_D));
    }
}

TEST_CASE("grid_search_maxmin basics") {
    const NetworkParams p = testutil::sweep_params();
    const ChannelState ch = sample_channels(p, 3);

    // n = 2 evaluates exactly the four corners.
    const GridSolution corners = grid_search_maxmin(p, ch, 2, 2);
    double best = -1.0;
    for (double alpha : {0.0, 1.0}) {
        for (double pc : {0.0, p.P_C}) {
            best = std::max(best, rate_bundle(p, ch, {alpha, pc}).R_min);
        }
    }
    CHECK(corners.value == doctest::Approx(best));

    // Nested refinement can only improve.
    const GridSolution coarse = grid_search_maxmin(p, ch, 101, 101);
    const GridSolution fine = grid_search_maxmin(p, ch, 1001, 1001);
    CHECK(fine.value >= coarse.value);

    CHECK_THROWS_AS(grid_search_maxmin(p, ch, 1, 10), std::invalid_argument);
}

TEST_CASE("grid_search_outage basics") {
    const NetworkParams p = testutil::sweep_params();
    const QosTargets t{1.0, 1.0};

    // Degenerate two-level power grid returns the better of the two columns.
    const GridSolution g = grid_search_outage(p, t, OutageObjective::Exact, 6, 2);
    const double k = t.xi_B() / (1.0 + t.xi_B());
    double best = 2.0;
    for (int i = 0; i < 6; ++i) {
        const double alpha = k + (1.0 - k) * (i + 0.5) / 6.0;
        for (int j = 1; j <= 2; ++j) {
            best = std::min(best, outage_exact(p, {alpha, p.P_C * j / 2.0}, t).p_out);
        }
    }
    CHECK(g.value == doctest::Approx(best));
    CHECK(g.alpha > k);
    CHECK(g.p_C > 0.0);

    // Bound objective dominates the exact objective at the same grid.
    const GridSolution gb = grid_search_outage(p, t, OutageObjective::Bound, 50, 50);
    const GridSolution ge = grid_search_outage(p, t, OutageObjective::Exact, 50, 50);
    CHECK(gb.value >= ge.value - 1e-12);
}

TEST_CASE("trial-count validation") {
    const NetworkParams p = testutil::sweep_params();
    const QosTargets t{1.0, 1.0};
    CHECK_THROWS_AS(estimate_joint_outage(p, {0.7, 1.0}, t, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(average_rates(p, RateStrategy::JOA, 0, 1), std::invalid_argument);
}
