// Test-only oracles, kept independent of the implementation paths they
// check: direct O(N^2) discrete transforms, an integer Hermite recursion,
// direct-summation log densities, quadrature moments and an accept-reject
// radial sampler.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "photonlab/field.hpp"
#include "photonlab/rng.hpp"

namespace oracles {

using photonlab::complexd;
using photonlab::GridSpec;

// A~(p_k) = dx / sqrt(2 pi) * sum_j A(x_j) exp(-i p_k x_j), brute force.
inline complexd direct_forward_mode(const photonlab::RealField& field, int k) {
  const GridSpec& grid = field.grid();
  complexd sum(0.0, 0.0);
  for (int j = 0; j < grid.n_modes(); ++j) {
    const double phase = -grid.momentum(k) * grid.position(j);
    sum += field.value(j) * complexd(std::cos(phase), std::sin(phase));
  }
  return sum * grid.dx() / std::sqrt(2.0 * std::numbers::pi);
}

// A(x_j) = dp / sqrt(2 pi) * sum_k A~(p_k) exp(+i p_k x_j), brute force.
inline double direct_inverse_site(const photonlab::SpectralField& spec,
                                  int j) {
  const GridSpec& grid = spec.grid();
  complexd sum(0.0, 0.0);
  for (int k = -grid.max_mode(); k <= grid.max_mode(); ++k) {
    const double phase = grid.momentum(k) * grid.position(j);
    sum += spec.amplitude(k) * complexd(std::cos(phase), std::sin(phase));
  }
  sum *= grid.dp() / std::sqrt(2.0 * std::numbers::pi);
  return sum.real();
}

// R(x_j) = dp * sum_k D(p_k) exp(i p_k x_j), brute force.
inline double direct_autocorr_lag(const photonlab::DensityField& density,
                                  int j) {
  const GridSpec& grid = density.grid();
  double sum = 0.0;
  for (int k = -grid.max_mode(); k <= grid.max_mode(); ++k) {
    sum += density.value(k) * std::cos(grid.momentum(k) * grid.position(j));
  }
  return sum * grid.dp();
}

// dx-weighted circular self-correlation of the real-space field.
inline double circular_correlation(const photonlab::RealField& field, int lag) {
  const GridSpec& grid = field.grid();
  const int n = grid.n_modes();
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    sum += field.value(j) * field.value((j + lag) % n);
  }
  return sum * grid.dx();
}

// Physicists' Hermite polynomials via H_n = 2x H_{n-1} - H_{n-1}';
// hermite(n)[j] is the coefficient of x^j.
inline std::vector<long long> hermite_coefficients(int n) {
  std::vector<long long> h{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<long long> next(static_cast<size_t>(m) + 1, 0);
    for (int j = 0; j < m; ++j) {
      next[static_cast<size_t>(j + 1)] += 2 * h[static_cast<size_t>(j)];
      if (j >= 1) next[static_cast<size_t>(j - 1)] -= j * h[static_cast<size_t>(j)];
    }
    h = std::move(next);
  }
  return h;
}

// Direct-summation unnormalized log density for n photons at mode kbar:
// n log |A~(-pbar)|^2 - sum_k omega_k |A~(p_k)|^2 dp.
inline double direct_log_density(const photonlab::SpectralField& field,
                                 int kbar, int n) {
  const GridSpec& grid = field.grid();
  double exponent = 0.0;
  for (int k = -grid.max_mode(); k <= grid.max_mode(); ++k) {
    if (!grid.retained(k)) continue;
    exponent += grid.omega(k) * std::norm(field.amplitude(k));
  }
  exponent *= grid.dp();
  return n * std::log(std::norm(field.amplitude(-kbar))) - exponent;
}

// Trapezoid second moment of the radial law u^n exp(-rate u):
// E[u] = int u^{n+1} e^{-rate u} du / int u^n e^{-rate u} du.
inline double quadrature_radial_mean(int n, double rate) {
  const double hi = (n + 60.0) / rate;
  const int steps = 400000;
  const double h = hi / steps;
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double u = i * h;
    const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
    const double f = std::pow(u, n) * std::exp(-rate * u);
    num += w * u * f;
    den += w * f;
  }
  return num / den;
}

// Accept-reject sampler for the radial law u^n exp(-rate u) with an
// exponential envelope of rate `rate / (n + 1)`.
inline double accept_reject_radial(photonlab::Xoshiro256StarStar& rng, int n,
                                   double rate) {
  const double mu = rate / (n + 1);
  const double slope = rate - mu;
  const double peak = n > 0 ? n / slope : 0.0;
  while (true) {
    const double u = -std::log(rng.uniform01()) / mu;
    double accept = 1.0;
    if (n > 0) {
      accept = std::pow(u / peak, n) * std::exp(-slope * (u - peak));
    } else {
      accept = std::exp(-slope * u);
    }
    if (rng.uniform01() <= accept) return u;
  }
}

}  // namespace oracles
