#include "fdd2d/scenario.hpp"

#include <cmath>

#include "fdd2d/errors.hpp"
#include "fdd2d/rng.hpp"
#include "fdd2d/units.hpp"

namespace fdd2d {

namespace {

constexpr double kSpeedOfLight = 299792458.0;
constexpr int kMaxDropAttempts = 10000;

double distance(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Free-space gain at the 1 m reference distance.
double friis_intercept(double carrier_hz) {
    const double wavelength = kSpeedOfLight / carrier_hz;
    const double g = wavelength / (4.0 * M_PI);
    return g * g;
}

Vec2 uniform_in_annulus(SplitMix64& rng, double r_min, double r_max) {
    const double u = rng.uniform01();
    const double r = std::sqrt(u * (r_max * r_max - r_min * r_min) + r_min * r_min);
    const double phi = 2.0 * M_PI * rng.uniform01();
    return Vec2{r * std::cos(phi), r * std::sin(phi)};
}

} // namespace

double Geometry::d2d_distance() const { return distance(dt, dr); }

NetworkParams build_params(const Geometry& geom, const RadioConfig& radio) {
    if (!(geom.pathloss_exponent > 2.0))
        throw InvalidGeometry("build_params: pathloss exponent must exceed 2");

    const double d_sb = distance(geom.dt, geom.bs);
    const double d_sc = distance(geom.dt, geom.cu);
    const double d_cb = distance(geom.cu, geom.bs);
    const double d_cd = distance(geom.cu, geom.dr);
    if (d_sb <= 0.0 || d_sc <= 0.0 || d_cb <= 0.0 || d_cd <= 0.0)
        throw InvalidGeometry("build_params: coincident nodes give a zero-length link");

    const double l0 = friis_intercept(radio.carrier_Hz);
    auto gain = [&](double d) { return l0 * std::pow(d, -geom.pathloss_exponent); };
    const double sigma2 = noise_power_mw(radio.noise_density_dBm_per_Hz, radio.bandwidth_Hz);

    NetworkParams params;
    params.phi_SB = gain(d_sb);
    params.phi_SC = gain(d_sc);
    params.phi_CB = gain(d_cb);
    params.phi_CD = gain(d_cd);
    params.sigma2_B = sigma2;
    params.sigma2_C = sigma2;
    params.sigma2_D = sigma2;
    params.beta = radio.beta;
    params.lambda = radio.lambda;
    params.theta = dbm_to_mw(radio.theta_dBm);
    params.P_S = dbm_to_mw(radio.P_S_dBm);
    params.P_C = dbm_to_mw(radio.P_C_dBm);
    params.validate();
    return params;
}

Geometry random_drop(const GeometryConstraints& c, std::uint64_t seed) {
    if (!(c.cell_radius > 0.0) || !(c.min_bs_distance >= 0.0) ||
        !(c.min_bs_distance <= c.cell_radius) || !(c.d2d_min > 0.0) || !(c.d2d_min <= c.d2d_max))
        throw InvalidGeometry("random_drop: inconsistent constraints");

    SplitMix64 rng(seed);
    Geometry geom;
    geom.cell_radius = c.cell_radius;
    geom.min_bs_distance = c.min_bs_distance;
    geom.pathloss_exponent = c.pathloss_exponent;
    geom.bs = Vec2{0.0, 0.0};
    geom.cu = uniform_in_annulus(rng, c.min_bs_distance, c.cell_radius);
    geom.dt = uniform_in_annulus(rng, c.min_bs_distance, c.cell_radius);

    for (int attempt = 0; attempt < kMaxDropAttempts; ++attempt) {
        const double d = c.d2d_min + (c.d2d_max - c.d2d_min) * rng.uniform01();
        const double phi = 2.0 * M_PI * rng.uniform01();
        const Vec2 dr{geom.dt.x + d * std::cos(phi), geom.dt.y + d * std::sin(phi)};
        const double r = std::hypot(dr.x, dr.y);
        if (r >= c.min_bs_distance && r <= c.cell_radius) {
            geom.dr = dr;
            return geom;
        }
    }
    throw InvalidGeometry("random_drop: no feasible DR position within attempt budget");
}

} // namespace fdd2d
