#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

#include "fdd2d/errors.hpp"

// Root bracketing and bisection shared by every solver in the library. No
// domain knowledge lives here.

namespace fdd2d {

struct Interval {
    double lo;
    double hi;
};

namespace numerics_detail {

inline void check_interval(const Interval& iv) {
    if (!(iv.lo < iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
        throw std::invalid_argument("Interval requires finite lo < hi");
}

inline double checked_eval(double fx, double x) {
    if (!std::isfinite(fx))
        throw NonFinite("function evaluated to a non-finite value at x = " + std::to_string(x));
    return fx;
}

} // namespace numerics_detail

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kDefaultMaxIter = 200;

/**
 * Bisection on a bracket with a sign change. An endpoint that is an exact
 * root is returned immediately, so f(lo)*f(hi) == 0 is accepted. The
 * tolerance is relative to the magnitude of the shrinking bracket, which
 * keeps the result scale-free for roots anywhere between 1e-12 and 1e+12.
 *
 * Throws NoSignChange if f(lo)*f(hi) > 0 and NonFinite if f produces
 * NaN/Inf anywhere in the bracket. Deterministic for identical inputs.
 */
template <class F>
double bisect(F&& f, Interval bracket, double tol = kDefaultTol, int max_iter = kDefaultMaxIter) {
    numerics_detail::check_interval(bracket);
    if (!(tol > 0.0))
        throw std::invalid_argument("bisect: tol must be positive");

    double lo = bracket.lo, hi = bracket.hi;
    double flo = numerics_detail::checked_eval(f(lo), lo);
    if (flo == 0.0)
        return lo;
    double fhi = numerics_detail::checked_eval(f(hi), hi);
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoSignChange("bisect: f(lo) and f(hi) have the same sign");

    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            return mid; // bracket exhausted at double resolution
        const double fm = numerics_detail::checked_eval(f(mid), mid);
        if (fm == 0.0)
            return mid;
        if ((fm > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
        if (hi - lo <= tol * std::max(std::abs(lo), std::abs(hi)))
            break;
    }
    return 0.5 * (lo + hi);
}

/**
 * Geometric scan [a, a*growth] upward from `start`, returning the first
 * sub-interval within [start, limit] on which f changes sign (endpoint roots
 * count), or nullopt if the sign of f never changes up to `limit`.
 */
template <class F>
std::optional<Interval> bracket_upward(F&& f, double start, double growth, double limit) {
    if (!(start > 0.0) || !(growth > 1.0) || !(limit >= start))
        throw std::invalid_argument("bracket_upward: require start > 0, growth > 1, limit >= start");

    double a = start;
    double fa = numerics_detail::checked_eval(f(a), a);
    while (a < limit) {
        const double b = std::min(a * growth, limit);
        if (!(b > a))
            break;
        const double fb = numerics_detail::checked_eval(f(b), b);
        if (fa == 0.0 || fb == 0.0 || (fa > 0.0) != (fb > 0.0))
            return Interval{a, b};
        a = b;
        fa = fb;
    }
    return std::nullopt;
}

} // namespace fdd2d
