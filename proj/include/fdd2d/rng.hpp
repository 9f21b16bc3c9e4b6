#pragma once

#include <cmath>
#include <cstdint>

// Counter-friendly RNG used everywhere randomness is needed. Monte Carlo
// loops derive one stream per trial index from (seed, index), so results are
// bit-identical for a fixed (seed, trials) pair no matter how the trials are
// scheduled across workers.

namespace fdd2d {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stream seed for trial `index` of run `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return mix64(state_ += 0x9e3779b97f4a7c15ULL); }

    // Uniform on (0, 1]; never returns 0 so log() below is safe.
    double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // Inverse-CDF exponential draw; explicit so results do not depend on the
    // standard library's distribution implementation.
    double exponential(double mean) { return -mean * std::log(uniform01()); }

  private:
    std::uint64_t state_;
};

} // namespace fdd2d
