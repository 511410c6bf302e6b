#pragma once

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "photonlab/errors.hpp"

namespace photonlab {

// One-dimensional periodic lattice for a single polarization component in
// natural units (hbar = c = 1). N sites of spacing dx = L/N carry the real
// field; momentum modes p_k = k*dp with dp = 2*pi/L carry its transform, so
// dx * dp * N = 2*pi by construction.
//
// The retained momentum set is symmetric: |k| <= N/2 - 1, every mode paired
// with its negative. The unpaired Nyquist slot is pinned to zero. k = 0
// participates only when include_zero_mode is set; a massless zero mode has
// infinite Gaussian variance, so including it requires a positive mass
// regulator. Dispersion is omega_k = sqrt(p_k^2 + m^2).
class GridSpec {
 public:
  GridSpec(int n_modes, double box_length, double mass = 0.0,
           bool include_zero_mode = false);

  int n_modes() const { return n_modes_; }
  double box_length() const { return box_length_; }
  double mass() const { return mass_; }
  bool include_zero_mode() const { return include_zero_mode_; }

  double dx() const { return box_length_ / n_modes_; }
  double dp() const { return 2.0 * std::numbers::pi / box_length_; }
  int max_mode() const { return n_modes_ / 2 - 1; }

  double position(int j) const { return j * dx(); }
  double momentum(int k) const { return k * dp(); }
  double omega(int k) const { return std::hypot(momentum(k), mass_); }

  bool retained(int k) const {
    if (k == 0) return include_zero_mode_;
    return std::abs(k) <= max_mode();
  }

  // Photon momenta must sit exactly on a retained nonzero mode; off-grid
  // momenta are rejected, not interpolated.
  void require_photon_mode(int k) const;

  bool operator==(const GridSpec& other) const = default;

 private:
  int n_modes_;
  double box_length_;
  double mass_;
  bool include_zero_mode_;
};

}  // namespace photonlab
