#pragma once

#include <stdexcept>

namespace antsynth {

/// Arguments violate an operation contract (dimension mismatch, bad range, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Experiment configuration problems; mapped to CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The pattern decreases monotonically away from the main lobe, so a side
/// lobe level does not exist. Signals a degenerate pattern, not a failure.
struct NoSideLobesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bridge economics would consume the whole colony.
struct InfeasibleBridgeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace antsynth
