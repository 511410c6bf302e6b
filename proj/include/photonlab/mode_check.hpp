#pragma once

namespace photonlab {

struct ModeCheckOptions {
  double measure = 0.1;  // mode-measure weight dp carried by the reduced pair
  double step = 1e-3;    // finite-difference step h
  double r_lo = 0.5;     // residual window keeps clear of the radial axis
  double r_hi = 0.0;     // 0 = choose automatically from the decay scale
};

// Single-pair reduction of the field Hamiltonian: the radial part of a 2D
// oscillator with mass 2*dp and frequency omega acting on
// f(r) = r^n exp(-omega dp r^2), the n-quanta wavefunction of one momentum
// pair. Applies the Hamiltonian with central finite differences and returns
// the max-norm residual of (H f - E_n f) / max|f| with E_n = (n + 1) omega.
// The residual vanishes at second order in the step.
double mode_eigenvalue_check(int n, double omega,
                             const ModeCheckOptions& opts = {});

}  // namespace photonlab
