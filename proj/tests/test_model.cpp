#include <doctest.h>

#include <cmath>

#include "fdd2d/model.hpp"
#include "fdd2d/units.hpp"
#include "test_util.hpp"

using namespace fdd2d;

namespace {

NetworkParams base_params() {
    NetworkParams p = testutil::sweep_params();
    return p;
}

// Straight transcription of the four SINR definitions with their explicit
// power-control case splits, kept independent of the library's evaluation
// path.
SinrBundle sinr_reference(const NetworkParams& p, const ChannelState& ch,
                          const PowerAllocation& a) {
    const double rsi = p.beta * std::pow(a.p_C, p.lambda);
    SinrBundle s;
    if (ch.h_SB >= p.theta / p.P_S) {
        s.gamma_SC = p.theta * ch.h_SC / (ch.h_SB * (rsi + p.sigma2_C));
        s.gamma_CB = a.alpha * a.p_C * ch.h_CB /
                     (p.theta + (1.0 - a.alpha) * a.p_C * ch.h_CB + p.sigma2_B);
    } else {
        s.gamma_SC = p.P_S * ch.h_SC / (rsi + p.sigma2_C);
        s.gamma_CB = a.alpha * a.p_C * ch.h_CB /
                     (p.P_S * ch.h_SB + (1.0 - a.alpha) * a.p_C * ch.h_CB + p.sigma2_B);
    }
    s.gamma_CD_C = a.alpha * a.p_C * ch.h_CD / ((1.0 - a.alpha) * a.p_C * ch.h_CD + p.sigma2_D);
    s.gamma_CD_S = (1.0 - a.alpha) * a.p_C * ch.h_CD / p.sigma2_D;
    return s;
}

} // namespace

TEST_CASE("NetworkParams validation rejects bad fields") {
    NetworkParams p = base_params();
    CHECK_NOTHROW(p.validate());
    p.phi_SB = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = base_params();
    p.lambda = 1.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = base_params();
    p.sigma2_D = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("dt_transmit_power implements truncated channel inversion") {
    NetworkParams p = base_params();
    p.theta = 0.1;
    p.P_S = 1.0;
    CHECK(dt_transmit_power(p, 0.05) == doctest::Approx(1.0)); // inverse would exceed P_S
    CHECK(dt_transmit_power(p, 0.5) == doctest::Approx(0.2));
    CHECK(dt_transmit_power(p, 0.0) == doctest::Approx(1.0)); // min saturates as h -> 0
}

TEST_CASE("dt power control keeps the BS interference below theta") {
    NetworkParams p = base_params();
    SplitMix64 rng(3);
    for (int i = 0; i < 10000; ++i) {
        const double h = rng.exponential(p.phi_SB);
        const double ps = dt_transmit_power(p, h);
        if (h >= p.theta / p.P_S) {
            CHECK(ps * h <= p.theta * (1.0 + 1e-12));
        } else {
            CHECK(ps == p.P_S);
        }
        CHECK(dt_bs_interference(p, h) == doctest::Approx(std::min(p.theta, p.P_S * h)));
    }
}

TEST_CASE("rsi_variance covers the constant, linear and fractional cases") {
    NetworkParams p = base_params();
    p.beta = 1.0;
    p.lambda = 0.0;
    CHECK(rsi_variance(p, 0.0) == 1.0); // 0^0 convention keeps the constant case continuous
    CHECK(rsi_variance(p, 123.0) == 1.0);
    p.beta = 0.01;
    p.lambda = 1.0;
    CHECK(rsi_variance(p, 10.0) == doctest::Approx(0.1));
    p.beta = 1.0;
    p.lambda = 0.5;
    CHECK(rsi_variance(p, 4.0) == doctest::Approx(2.0));
}

TEST_CASE("trr and its inversion") {
    NetworkParams p = base_params();
    p.beta = 0.25;
    p.lambda = 0.4;
    CHECK(trr(p, 1.0) == doctest::Approx(4.0)); // p_C = 1 gives 1/beta for any lambda

    // 130 dB TRR inverts exactly for lambda < 1.
    const double target = db_to_linear(130.0);
    const double pc = trr_to_power(p, target);
    CHECK(trr(p, pc) == doctest::Approx(target).epsilon(1e-12));

    p.lambda = 1.0;
    CHECK(trr(p, 5.0) == doctest::Approx(1.0 / p.beta));
    CHECK(trr(p, 500.0) == doctest::Approx(1.0 / p.beta));
    CHECK_THROWS_AS(trr_to_power(p, target), DegenerateInput);

    CHECK_THROWS_AS(trr(p, 0.0), DegenerateInput);
    p.beta = 0.0;
    CHECK_THROWS_AS(trr(p, 1.0), DegenerateInput);
}

TEST_CASE("trr is increasing in p_C for lambda < 1 and constant at lambda = 1") {
    NetworkParams p = base_params();
    p.beta = 0.1;
    for (double lambda : {0.0, 0.3, 0.9}) {
        p.lambda = lambda;
        double prev = trr(p, 0.01);
        for (double pc = 0.02; pc < 100.0; pc *= 1.5) {
            const double cur = trr(p, pc);
            CHECK(cur > prev);
            prev = cur;
        }
    }
    p.lambda = 1.0;
    CHECK(trr(p, 0.01) == doctest::Approx(trr(p, 100.0)));
}

TEST_CASE("sinr_bundle at the alpha extremes") {
    NetworkParams p = base_params();
    const ChannelState ch = sample_channels(p, 99);
    const double pc = 10.0;

    const SinrBundle all_up = sinr_bundle(p, ch, {1.0, pc});
    CHECK(all_up.gamma_CD_C == doctest::Approx(pc * ch.h_CD / p.sigma2_D));
    CHECK(all_up.gamma_CD_S == 0.0);

    const SinrBundle all_relay = sinr_bundle(p, ch, {0.0, pc});
    CHECK(all_relay.gamma_CB == 0.0);
    CHECK(all_relay.gamma_CD_C == 0.0);
}

TEST_CASE("sinr_bundle at p_C = 0 keeps the RSI convention") {
    NetworkParams p = base_params();
    p.lambda = 0.0;
    p.beta = 2.0;
    const ChannelState ch = sample_channels(p, 5);
    const SinrBundle s = sinr_bundle(p, ch, {0.5, 0.0});
    const double p_s = dt_transmit_power(p, ch.h_SB);
    CHECK(s.gamma_SC == doctest::Approx(p_s * ch.h_SC / (2.0 + p.sigma2_C)));
    CHECK(s.gamma_CB == 0.0);
    CHECK(s.gamma_CD_S == 0.0);
}

TEST_CASE("sinr_bundle matches a direct transcription of the definitions") {
    NetworkParams p = base_params();
    SplitMix64 rng(2024);
    for (int i = 0; i < 20000; ++i) {
        NetworkParams q = testutil::random_params(rng);
        const ChannelState ch = sample_channels(q, rng.next());
        const PowerAllocation alloc{rng.uniform01(), q.P_C * rng.uniform01()};
        const SinrBundle got = sinr_bundle(q, ch, alloc);
        const SinrBundle want = sinr_reference(q, ch, alloc);
        CHECK(got.gamma_SC == doctest::Approx(want.gamma_SC).epsilon(1e-12));
        CHECK(got.gamma_CD_C == doctest::Approx(want.gamma_CD_C).epsilon(1e-12));
        CHECK(got.gamma_CD_S == doctest::Approx(want.gamma_CD_S).epsilon(1e-12));
        CHECK(got.gamma_CB == doctest::Approx(want.gamma_CB).epsilon(1e-12));
    }
    (void)p;
}

TEST_CASE("rate_of reference points") {
    CHECK(rate_of(0.0) == 0.0);
    CHECK(rate_of(1.0) == doctest::Approx(1.0));
    CHECK(rate_of(3.0) == doctest::Approx(2.0));
}

TEST_CASE("rate_bundle keeps its internal definitions") {
    SplitMix64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        const NetworkParams q = testutil::random_params(rng);
        const ChannelState ch = sample_channels(q, rng.next());
        const PowerAllocation alloc{rng.uniform01(), q.P_C * rng.uniform01()};
        const RateBundle r = rate_bundle(q, ch, alloc);
        CHECK(r.R_D == std::min(r.R_SC, r.R_CDS));
        CHECK(r.R_min == std::min(r.R_B, r.R_D));
        CHECK(r.R_B >= 0.0);
        CHECK(r.R_D >= 0.0);
    }
}

TEST_CASE("rate monotonicity in alpha and p_C") {
    SplitMix64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        const NetworkParams q = testutil::random_params(rng);
        const ChannelState ch = sample_channels(q, rng.next());
        const double a = rng.uniform01() * 0.98;
        const double da = (1.0 - a) * rng.uniform01();
        const double pc = q.P_C * (0.01 + 0.49 * rng.uniform01());
        const double dp = (q.P_C - pc) * rng.uniform01();

        const RateBundle r00 = rate_bundle(q, ch, {a, pc});
        const RateBundle r10 = rate_bundle(q, ch, {a + da, pc});
        const RateBundle r01 = rate_bundle(q, ch, {a, pc + dp});

        CHECK(r10.R_B >= r00.R_B - 1e-12);       // R_B nondecreasing in alpha
        CHECK(r01.R_B >= r00.R_B - 1e-12);       // ... and in p_C
        CHECK(r10.R_CDS <= r00.R_CDS + 1e-12);   // R_CD,S nonincreasing in alpha
        CHECK(r01.R_CDS >= r00.R_CDS - 1e-12);   // ... nondecreasing in p_C
        CHECK(r01.R_SC <= r00.R_SC + 1e-12);     // R_SC nonincreasing in p_C
        if (q.beta > 0.0 && q.lambda > 0.0 && dp > 1e-9)
            CHECK(r01.R_SC < r00.R_SC + 1e-15); // strict when the RSI actually grows
    }
}

TEST_CASE("sample_channels is deterministic per seed") {
    const NetworkParams p = base_params();
    const ChannelState a = sample_channels(p, 12345);
    const ChannelState b = sample_channels(p, 12345);
    CHECK(a.h_SB == b.h_SB);
    CHECK(a.h_SC == b.h_SC);
    CHECK(a.h_CB == b.h_CB);
    CHECK(a.h_CD == b.h_CD);
    const ChannelState c = sample_channels(p, 12346);
    CHECK(a.h_SB != c.h_SB);
}

TEST_CASE("sample_channels mean matches the average gain (law of large numbers)") {
    NetworkParams p = base_params();
    p.phi_CD = 0.5;
    const std::uint64_t n = 1000000;
    double sum = 0.0;
    for (std::uint64_t i = 0; i < n; ++i)
        sum += sample_channels(p, derive_seed(77, i)).h_CD;
    const double mean = sum / static_cast<double>(n);
    CHECK(std::abs(mean - 0.5) <= 3.0 * 0.5 / 1000.0);
}
