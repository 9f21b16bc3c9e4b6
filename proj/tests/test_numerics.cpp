#include <doctest.h>

#include <cmath>

#include "fdd2d/numerics.hpp"
#include "fdd2d/rng.hpp"

using namespace fdd2d;

TEST_CASE("bisect solves a linear root") {
    const double x = bisect([](double v) { return v - 2.0; }, Interval{0.0, 10.0});
    CHECK(x == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("bisect accepts an exact root at an endpoint") {
    const double x = bisect([](double v) { return v * v; }, Interval{0.0, 1.0});
    CHECK(x == 0.0);
    const double y = bisect([](double v) { return v - 1.0; }, Interval{0.0, 1.0});
    CHECK(y == 1.0);
}

TEST_CASE("bisect finds the cubic root of x^3 - x - 2 by residual") {
    auto f = [](double v) { return v * v * v - v - 2.0; };
    const double x = bisect(f, Interval{1.0, 2.0});
    CHECK(std::abs(f(x)) <= 1e-9); // independent check: substitute the root back
    CHECK(x == doctest::Approx(1.5213797068045676).epsilon(1e-9));
}

TEST_CASE("bisect result stays inside the bracket") {
    SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const double root = 20.0 * rng.uniform01() - 10.0;
        const double lo = root - 1.0 - 10.0 * rng.uniform01();
        const double hi = root + 1.0 + 10.0 * rng.uniform01();
        const double slope = 0.1 + 10.0 * rng.uniform01();
        const double x = bisect([&](double v) { return slope * (v - root); }, Interval{lo, hi});
        CHECK(x >= lo);
        CHECK(x <= hi);
        CHECK(x == doctest::Approx(root).epsilon(1e-8));
    }
}

TEST_CASE("bisect rejects a bracket without a sign change") {
    CHECK_THROWS_AS(bisect([](double) { return 1.0; }, Interval{0.0, 1.0}), NoSignChange);
    CHECK_THROWS_AS(bisect([](double v) { return v * v + 1.0; }, Interval{-1.0, 1.0}),
                    NoSignChange);
}

TEST_CASE("bisect reports non-finite evaluations") {
    auto f = [](double v) { return v < 0.5 ? -1.0 : std::nan(""); };
    CHECK_THROWS_AS(bisect(f, Interval{0.0, 1.0}), NonFinite);
}

TEST_CASE("bisect validates its inputs") {
    CHECK_THROWS_AS(bisect([](double v) { return v; }, Interval{1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bisect([](double v) { return v; }, Interval{2.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bisect([](double v) { return v; }, Interval{-1.0, 1.0}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("bracket_upward scans geometrically") {
    const auto iv = bracket_upward([](double v) { return v - 100.0; }, 1.0, 2.0, 1e6);
    REQUIRE(iv.has_value());
    CHECK(iv->lo == doctest::Approx(64.0));
    CHECK(iv->hi == doctest::Approx(128.0));
}

TEST_CASE("bracket_upward returns nothing for a constant-sign function") {
    CHECK_FALSE(bracket_upward([](double) { return 1.0; }, 1.0, 2.0, 1e6).has_value());
}

TEST_CASE("bracket_upward encloses the root of log(x) - 3") {
    const auto iv = bracket_upward([](double v) { return std::log(v) - 3.0; }, 0.125, 2.0, 1e6);
    REQUIRE(iv.has_value());
    const double e3 = std::exp(3.0);
    CHECK(iv->lo <= e3);
    CHECK(iv->hi >= e3);
}

TEST_CASE("bracket_upward validates its inputs") {
    auto id = [](double v) { return v; };
    CHECK_THROWS_AS(bracket_upward(id, 0.0, 2.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(bracket_upward(id, 1.0, 1.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(bracket_upward(id, 10.0, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("bracket then bisect recovers roots of random monotone functions") {
    SplitMix64 rng(42);
    for (int i = 0; i < 500; ++i) {
        const bool affine = rng.next() & 1;
        const double root = 1e-3 + 1e4 * rng.uniform01();
        const double scale = 0.01 + 100.0 * rng.uniform01();
        auto f = [&](double v) {
            return affine ? scale * (v - root) : scale * (std::log(v) - std::log(root));
        };
        const auto iv = bracket_upward(f, 1e-6, 1.7, 1e9);
        REQUIRE(iv.has_value());
        const double x = bisect(f, *iv);
        CHECK(x == doctest::Approx(root).epsilon(1e-7));
    }
}
