#include "photonlab/multimode.hpp"

#include <sstream>

namespace photonlab {

std::vector<MultiModeTerm> MultiModeExpression::active_terms() const {
  std::vector<MultiModeTerm> out;
  for (const MultiModeTerm& t : terms_) {
    if (!inert(t)) out.push_back(t);
  }
  return out;
}

MultiModeTerm MultiModeExpression::dominant_counter_term() const {
  if (!counter_propagating()) {
    throw config_error(
        "dominant_counter_term applies to counter-propagating pairs only");
  }
  const MultiModeTerm* best = nullptr;
  for (const MultiModeTerm& t : terms_) {
    // the cross factor (A1* A2* + A1 A2) drops out on the p1 = -p2 shell
    if (t.cross) continue;
    if (best == nullptr || t.pow_delta > best->pow_delta) best = &t;
  }
  if (best == nullptr) {
    throw numeric_error("no dominant term in counter-propagating expression");
  }
  return *best;
}

std::string MultiModeExpression::text() const {
  std::ostringstream os;
  bool first = true;
  for (const MultiModeTerm& t : terms_) {
    if (first) {
      if (t.coeff < 0) os << '-';
      first = false;
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    os << std::abs(t.coeff);
    auto power = [&os](const char* sym, int k) {
      if (k == 0) return;
      os << sym;
      if (k != 1) os << '^' << k;
    };
    power("|p1|", t.pow_p1);
    power("|p2|", t.pow_p2);
    power("D1", t.pow_d1);
    power("D2", t.pow_d2);
    power("delta", t.pow_delta);
    if (t.cross) os << "(A1*A2* + A1A2)";
  }
  return os.str();
}

nlohmann::json MultiModeExpression::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const MultiModeTerm& t : terms_) {
    terms.push_back({{"coeff", t.coeff},
                     {"pow_p1", t.pow_p1},
                     {"pow_p2", t.pow_p2},
                     {"pow_d1", t.pow_d1},
                     {"pow_d2", t.pow_d2},
                     {"pow_delta", t.pow_delta},
                     {"cross", t.cross}});
  }
  return nlohmann::json{
      {"mode1", k1_}, {"mode2", k2_}, {"terms", terms}, {"text", text()}};
}

MultiModeExpression two_photon_expression(const GridSpec& grid, int k1,
                                          int k2) {
  grid.require_photon_mode(k1);
  grid.require_photon_mode(k2);
  std::vector<MultiModeTerm> terms{
      MultiModeTerm{16, 2, 2, 1, 1, 0, false},
      MultiModeTerm{-8, 1, 1, 0, 0, 1, true},
      MultiModeTerm{4, 2, 0, 0, 0, 2, false},
  };
  return MultiModeExpression(grid, k1, k2, std::move(terms));
}

DensityMonomial squared_density_form(const PhotonPolynomial& poly) {
  if (!poly.contact_free() || poly.terms().size() != 1) {
    throw config_error(
        "squared_density_form needs a contact-free single-monomial "
        "prefactor; apply drop_contact_terms first");
  }
  const PolyTerm& t = poly.terms().front();
  std::int64_t sq;
  if (__builtin_mul_overflow(t.coeff, t.coeff, &sq)) {
    throw numeric_error("integer overflow squaring prefactor coefficient");
  }
  return DensityMonomial{sq, 2 * t.pow_pbar, t.pow_a};
}

DensityMonomial coincident_density_form(const MultiModeExpression& expr) {
  if (expr.mode1() != expr.mode2()) {
    throw config_error("coincident reduction requires mode1 == mode2");
  }
  const std::vector<MultiModeTerm> active = expr.active_terms();
  if (active.size() != 1 || active.front().cross) {
    throw numeric_error("coincident reduction is not a single monomial");
  }
  const MultiModeTerm& t = active.front();
  return DensityMonomial{t.coeff, t.pow_p1 + t.pow_p2, t.pow_d1 + t.pow_d2};
}

}  // namespace photonlab
