#pragma once

#include <stdexcept>

namespace fdd2d {

// Error taxonomy shared by the numerics, analysis and solver layers.

// Root bracket does not enclose a sign change.
struct NoSignChange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A callback produced NaN/Inf inside a bracket.
struct NonFinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its numeric domain (e.g. p_C = 0).
struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested uplink rate exceeds the achievable maximum.
struct InfeasibleTarget : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A channel realization leaves a solver without a finite solution.
struct DegenerateChannel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Node placement violates the geometric constraints.
struct InvalidGeometry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Experiment configuration is malformed or inconsistent.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fdd2d
