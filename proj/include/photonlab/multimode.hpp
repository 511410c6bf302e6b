#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "photonlab/grid.hpp"
#include "photonlab/polynomial.hpp"

namespace photonlab {

// One monomial of the squared two-photon wavefunctional over the formal
// variables D1 = Dbar(p1), D2 = Dbar(p2), the pair contact symbol
// delta = delta(p1 + p2), and the phase-sensitive factor
// cross = (A1* A2* + A1 A2).
struct MultiModeTerm {
  std::int64_t coeff;
  int pow_p1;     // power of |p1|
  int pow_p2;     // power of |p2|
  int pow_d1;     // power of Dbar(p1)
  int pow_d2;     // power of Dbar(p2)
  int pow_delta;  // power of delta(p1 + p2)
  bool cross;     // carries the (A1* A2* + A1 A2) factor

  bool operator==(const MultiModeTerm&) const = default;
};

// Contact-free monomial in a single Dbar, used to compare the coincident
// two-photon expression with the squared single-mode prefactor.
struct DensityMonomial {
  std::int64_t coeff;
  int pow_p;
  int pow_density;

  bool operator==(const DensityMonomial&) const = default;
};

// |psi(p1,p2)|^2 prefactor for two photons of distinct creation momenta,
// transcribed exactly; the exponential Gaussian factor is implicit.
class MultiModeExpression {
 public:
  int mode1() const { return k1_; }
  int mode2() const { return k2_; }
  const GridSpec& grid() const { return grid_; }
  const std::vector<MultiModeTerm>& terms() const { return terms_; }

  bool counter_propagating() const { return k2_ == -k1_; }

  // A delta term is inert when p1 + p2 != 0, since the pair contact symbol
  // vanishes off its support.
  bool inert(const MultiModeTerm& t) const {
    return t.pow_delta > 0 && !counter_propagating();
  }

  // Terms that survive for p1 != -p2 (the inert delta terms removed).
  std::vector<MultiModeTerm> active_terms() const;

  // Counter-propagating reduction: the extremum is governed by the highest
  // order in the contact symbol. The cross term is first order and its
  // phase factor cancels on the p1 = -p2 shell, so only the pure delta^2
  // term remains.
  MultiModeTerm dominant_counter_term() const;

  std::string text() const;
  nlohmann::json to_json() const;

 private:
  friend MultiModeExpression two_photon_expression(const GridSpec& grid,
                                                   int k1, int k2);
  MultiModeExpression(GridSpec grid, int k1, int k2,
                      std::vector<MultiModeTerm> terms)
      : grid_(grid), k1_(k1), k2_(k2), terms_(std::move(terms)) {}

  GridSpec grid_;
  int k1_;
  int k2_;
  std::vector<MultiModeTerm> terms_;
};

// Squared wavefunctional prefactor for the state with one photon at p1 and
// one at p2 (both on-grid and nonzero):
//   16|p1|^2|p2|^2 D1 D2 - 8|p1||p2| delta (A1* A2* + A1 A2)
//   + 4|p1|^2 delta^2
MultiModeExpression two_photon_expression(const GridSpec& grid, int k1,
                                          int k2);

// |Q|^2 of a contact-free single-monomial prefactor as a monomial in Dbar.
DensityMonomial squared_density_form(const PhotonPolynomial& poly);

// The coincident-momentum (k1 == k2) delta-free reduction as a monomial in
// the shared Dbar; must equal squared_density_form(drop_contact_terms(Q_2)).
DensityMonomial coincident_density_form(const MultiModeExpression& expr);

}  // namespace photonlab
