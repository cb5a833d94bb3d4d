#pragma once

#include <stdexcept>

namespace kpo {

inline constexpr const char* version_string = "0.1.0";

// Invalid or inconsistent run configuration (CLI exit code 2).
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Solver or floating-point contract violation (CLI exit code 3).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters outside the regime where the requested quantity exists
// (CLI exit code 4), e.g. the unbounded four-photon regime.
struct physics_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kpo
