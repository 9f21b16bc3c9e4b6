#pragma once

#include <cmath>

// dB/dBm conversions. All library internals work in linear mW and
// dimensionless power gains; these helpers are for the config and report
// boundaries only.

namespace fdd2d {

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

// Thermal noise over a bandwidth, e.g. -174 dBm/Hz over 180 kHz -> -121.45 dBm.
inline double noise_power_mw(double density_dbm_per_hz, double bandwidth_hz) {
    return dbm_to_mw(density_dbm_per_hz + 10.0 * std::log10(bandwidth_hz));
}

} // namespace fdd2d
