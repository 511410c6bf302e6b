#pragma once

#include <stdexcept>

namespace photonlab {

// Invalid configuration or a violated call contract. The CLI maps this to
// exit code 2.
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numeric contract violation detected at runtime (symmetry residue over
// tolerance, integer overflow in exact arithmetic, regression mismatch).
// The CLI maps this to exit code 3.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace photonlab
