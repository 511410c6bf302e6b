#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "photonlab/content.hpp"
#include "photonlab/field.hpp"

namespace photonlab {

struct MaximizerReport {
  DensityField density;
  double log_prob = 0.0;
  std::string method;  // "closed_form" or "ascent"
  std::uint64_t iterations = 0;
  double residual = 0.0;
  bool converged = true;
};

nlohmann::json to_json(const MaximizerReport& report,
                       const PhotonContent& content);

// Unnormalized log probability of a spectral density under the given photon
// content: sum_i n_i log Dbar(p_i) - sum_k omega_k D(p_k) dp. Returns -inf
// when a required Dbar(p_i) vanishes; that is a value, not an error.
double log_probability(const DensityField& density,
                       const PhotonContent& content);

// Closed-form lattice maximizer: a spike pair D(+-k_i) = n_i / (2 omega_i dp)
// per entry, zero elsewhere, preserving the integrated pair weight
// n_i / omega_i. Counter-propagating pairs are rejected and belong to
// counter_propagating_extremum.
MaximizerReport most_likely_density(const GridSpec& grid,
                                    const PhotonContent& content);

struct AscentOptions {
  double step = 1.0;
  double tol = 1e-10;           // on the projected gradient
  std::uint64_t max_iter = 100000;
};

// Independent numeric oracle: projected gradient ascent on log_probability
// over {D >= 0, D even, excluded modes pinned}, evenness enforced by
// optimizing the k > 0 half-space. Non-convergence is reported, never
// silently ignored.
MaximizerReport ascent_maximize(const GridSpec& grid,
                                const PhotonContent& content,
                                const DensityField& init,
                                const AscentOptions& opts = {});

DensityField flat_density(const GridSpec& grid, double value);

struct CounterPropagatingReport {
  MaximizerReport report;  // density identically zero
  // d/dD(p_k) of the dominant-term log density at D = 0 for k = 1..max_mode
  // (index 0 is the zero mode when included): -omega_k dp at every mode.
  std::vector<double> exponent_gradient;
  bool certified = false;  // every feasible directional derivative <= 0
};

// Counter-propagating pair (k, -k): the dominant contact-squared term leaves
// a pure decaying exponential, so the extremum sits at D = 0 with no average
// energy in the mode. The certificate records the per-mode derivatives.
CounterPropagatingReport counter_propagating_extremum(const GridSpec& grid,
                                                      int kbar);

// Autocorrelation of the closed-form maximizer:
// sum_i n_i cos(p_i x) / omega_i on the lattice. The counter-propagating
// pair yields the zero field.
RealField most_likely_autocorrelation(const GridSpec& grid,
                                      const PhotonContent& content);

}  // namespace photonlab
