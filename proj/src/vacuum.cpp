#include "photonlab/vacuum.hpp"

#include <cmath>

namespace photonlab {

double VacuumGaussian::log_weight(const SpectralField& field) const {
  if (!(field.grid() == grid_)) {
    throw config_error("field grid does not match the vacuum grid");
  }
  double sum = grid_.include_zero_mode()
                   ? grid_.omega(0) * std::norm(field.amplitude(0))
                   : 0.0;
  for (int k = 1; k <= grid_.max_mode(); ++k) {
    sum += 2.0 * grid_.omega(k) * std::norm(field.amplitude(k));
  }
  return -0.5 * sum * grid_.dp();
}

double evaluate_log_density(const PhotonPolynomial& poly,
                            const SpectralField& field, int kbar,
                            const VacuumGaussian& vac) {
  vac.grid().require_photon_mode(kbar);
  if (!(field.grid() == vac.grid())) {
    throw config_error("field grid does not match the vacuum grid");
  }
  const std::complex<double> a = field.amplitude(-kbar);
  const std::complex<double> q =
      evaluate_prefactor(poly, a, vac.grid().omega(kbar));
  // log|q|^2 with log(0) = -inf as a value, plus twice the log weight
  return std::log(std::norm(q)) + 2.0 * vac.log_weight(field);
}

}  // namespace photonlab
