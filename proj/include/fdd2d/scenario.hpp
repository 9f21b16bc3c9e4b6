#pragma once

#include <cstdint>

#include "fdd2d/model.hpp"

// Physical-layer bridge: builds the statistical NetworkParams from node
// geometry and a dBm-world radio configuration. Everything downstream of
// build_params works in linear units.

namespace fdd2d {

struct Vec2 {
    double x;
    double y;
};

struct Geometry {
    double cell_radius;        // m
    double min_bs_distance;    // m, closest any user may sit to the BS
    double pathloss_exponent;  // > 2
    Vec2 bs;                   // base station position [m]
    Vec2 cu;                   // cellular user / relay
    Vec2 dt;                   // D2D transmitter
    Vec2 dr;                   // D2D receiver

    double d2d_distance() const; // |dt - dr|
};

struct GeometryConstraints {
    double cell_radius = 200.0;
    double min_bs_distance = 30.0;
    double d2d_min = 150.0; // DT-DR separation range [m]
    double d2d_max = 300.0;
    double pathloss_exponent = 3.8;
};

struct RadioConfig {
    double carrier_Hz = 2e9;
    double bandwidth_Hz = 180e3;
    double noise_density_dBm_per_Hz = -174.0;
    double P_S_dBm = 23.0;
    double P_C_dBm = 23.0;
    double theta_dBm = -92.0;
    double beta = 1.0;
    double lambda = 0.0;
};

// Average gains phi_ij = friis(1 m) * d_ij^(-exponent) with a free-space
// intercept at the carrier frequency; noise sigma^2 = density * bandwidth.
// Throws InvalidGeometry if any used pairwise distance is zero.
NetworkParams build_params(const Geometry& geom, const RadioConfig& radio);

// Uniform drop respecting the cell radius, the BS keep-out disc and the
// DT-DR separation range. Deterministic per seed; throws InvalidGeometry if
// no valid DR position is found within a bounded number of attempts.
Geometry random_drop(const GeometryConstraints& constraints, std::uint64_t seed);

} // namespace fdd2d
