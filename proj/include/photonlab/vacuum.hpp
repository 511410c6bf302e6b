#pragma once

#include "photonlab/field.hpp"
#include "photonlab/polynomial.hpp"

namespace photonlab {

// The vacuum Gaussian functional over spectral amplitudes. Normalization is
// fixed to 1, so only ratios and argmax locations of the induced densities
// are meaningful.
class VacuumGaussian {
 public:
  explicit VacuumGaussian(const GridSpec& grid) : grid_(grid) {}

  const GridSpec& grid() const { return grid_; }
  double omega(int k) const { return grid_.omega(k); }

  // log Psi_0 = -1/2 sum_k omega_k |A~(p_k)|^2 dp over retained modes
  double log_weight(const SpectralField& field) const;

 private:
  GridSpec grid_;
};

// Unnormalized log density log |Q_n(A~(-pbar))|^2 - sum_k omega_k |A~|^2 dp
// for a contact-free prefactor at photon mode kbar. Returns -inf when the
// prefactor vanishes.
double evaluate_log_density(const PhotonPolynomial& poly,
                            const SpectralField& field, int kbar,
                            const VacuumGaussian& vac);

}  // namespace photonlab
