#include "photonlab/grid.hpp"

#include <string>

namespace photonlab {

GridSpec::GridSpec(int n_modes, double box_length, double mass,
                   bool include_zero_mode)
    : n_modes_(n_modes),
      box_length_(box_length),
      mass_(mass),
      include_zero_mode_(include_zero_mode) {
  if (n_modes <= 0 || n_modes % 2 != 0) {
    throw config_error("n_modes must be a positive even integer, got " +
                       std::to_string(n_modes));
  }
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw config_error("box_length must be a positive finite real");
  }
  if (!(mass >= 0.0) || !std::isfinite(mass)) {
    throw config_error("mass must be a nonnegative finite real");
  }
  if (include_zero_mode && mass == 0.0) {
    throw config_error(
        "include_zero_mode requires a positive mass regulator: the massless "
        "zero mode has infinite Gaussian variance");
  }
}

void GridSpec::require_photon_mode(int k) const {
  if (k == 0) {
    throw config_error("photon mode index must be nonzero");
  }
  if (std::abs(k) > max_mode()) {
    throw config_error("photon mode index " + std::to_string(k) +
                       " is off-grid (|k| must be <= " +
                       std::to_string(max_mode()) + ")");
  }
}

}  // namespace photonlab
