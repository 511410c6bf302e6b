#include "photonlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace photonlab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw numeric_error("integer overflow in exact polynomial arithmetic");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw numeric_error("integer overflow in exact polynomial arithmetic");
  }
  return out;
}

void check_homogeneity(int n, const PolyTerm& t) {
  if (t.pow_a < 0 || t.pow_d < 0 || t.pow_pbar < 0 ||
      t.pow_a + 2 * t.pow_d != n || t.pow_pbar + t.pow_d != n) {
    throw config_error("term violates the homogeneity relations for n = " +
                       std::to_string(n));
  }
}

void append_power(std::ostream& os, const char* symbol, int power) {
  if (power == 0) return;
  os << symbol;
  if (power != 1) os << '^' << power;
}

std::string render_terms(const std::vector<PolyTerm>& terms,
                         std::int64_t coeff_div, int pbar_div) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const PolyTerm& t : terms) {
    const std::int64_t c = t.coeff / coeff_div;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::int64_t mag = std::abs(c);
    const bool bare = t.pow_pbar == pbar_div && t.pow_a == 0 && t.pow_d == 0;
    if (mag != 1 || bare) os << mag;
    append_power(os, "|p|", t.pow_pbar - pbar_div);
    append_power(os, "a", t.pow_a);
    append_power(os, "d", t.pow_d);
  }
  return os.str();
}

}  // namespace

PhotonPolynomial PhotonPolynomial::unit() {
  return PhotonPolynomial(0, {PolyTerm{1, 0, 0, 0}});
}

PhotonPolynomial PhotonPolynomial::from_terms(int photon_count,
                                              std::vector<PolyTerm> terms) {
  if (photon_count < 0) throw config_error("photon count must be >= 0");
  for (const PolyTerm& t : terms) check_homogeneity(photon_count, t);
  std::sort(terms.begin(), terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return a.pow_a > b.pow_a; });
  for (size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].pow_a == terms[i - 1].pow_a) {
      throw config_error("duplicate monomial in polynomial term list");
    }
  }
  std::erase_if(terms, [](const PolyTerm& t) { return t.coeff == 0; });
  return PhotonPolynomial(photon_count, std::move(terms));
}

bool PhotonPolynomial::contact_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const PolyTerm& t) { return t.pow_d == 0; });
}

std::int64_t PhotonPolynomial::coefficient(int pow_d) const {
  for (const PolyTerm& t : terms_) {
    if (t.pow_d == pow_d) return t.coeff;
  }
  return 0;
}

std::string PhotonPolynomial::canonical_text() const {
  return render_terms(terms_, 1, 0);
}

std::string PhotonPolynomial::factored_text() const {
  if (terms_.empty()) return "0";
  std::int64_t g = 0;
  int min_pbar = terms_.front().pow_pbar;
  for (const PolyTerm& t : terms_) {
    g = std::gcd(g, t.coeff);
    min_pbar = std::min(min_pbar, t.pow_pbar);
  }
  if (terms_.front().coeff < 0) g = -g;
  const bool trivial = (g == 1 && min_pbar == 0);
  if (terms_.size() == 1 || trivial) return render_terms(terms_, 1, 0);
  std::ostringstream os;
  if (g != 1 || min_pbar == 0) os << g;
  append_power(os, "|p|", min_pbar);
  os << '(' << render_terms(terms_, g, min_pbar) << ')';
  return os.str();
}

nlohmann::json PhotonPolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const PolyTerm& t : terms_) {
    terms.push_back({{"coeff", t.coeff},
                     {"pow_a", t.pow_a},
                     {"pow_d", t.pow_d},
                     {"pow_pbar", t.pow_pbar}});
  }
  return nlohmann::json{{"n", photon_count_}, {"terms", terms}};
}

PhotonPolynomial PhotonPolynomial::from_json(const nlohmann::json& j) {
  std::vector<PolyTerm> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back(PolyTerm{t.at("coeff").get<std::int64_t>(),
                             t.at("pow_a").get<int>(),
                             t.at("pow_d").get<int>(),
                             t.at("pow_pbar").get<int>()});
  }
  return from_terms(j.at("n").get<int>(), std::move(terms));
}

PhotonPolynomial apply_creation(const PhotonPolynomial& poly) {
  const int n = poly.photon_count() + 1;
  // index by pow_d: pow_a = n - 2*pow_d
  std::vector<std::int64_t> coeffs(static_cast<size_t>(n / 2) + 1, 0);
  for (const PolyTerm& t : poly.terms()) {
    // 2|p| a * term
    coeffs[static_cast<size_t>(t.pow_d)] = checked_add(
        coeffs[static_cast<size_t>(t.pow_d)], checked_mul(2, t.coeff));
    // -d * d(term)/da
    if (t.pow_a > 0) {
      coeffs[static_cast<size_t>(t.pow_d) + 1] =
          checked_add(coeffs[static_cast<size_t>(t.pow_d) + 1],
                      checked_mul(-t.pow_a, t.coeff));
    }
  }
  std::vector<PolyTerm> terms;
  for (int m = 0; m <= n / 2; ++m) {
    if (coeffs[static_cast<size_t>(m)] == 0) continue;
    terms.push_back(
        PolyTerm{coeffs[static_cast<size_t>(m)], n - 2 * m, m, n - m});
  }
  return PhotonPolynomial::from_terms(n, std::move(terms));
}

PhotonPolynomial nphoton_polynomial(int n) {
  if (n < 0) throw config_error("photon count must be >= 0");
  PhotonPolynomial q = PhotonPolynomial::unit();
  for (int i = 0; i < n; ++i) q = apply_creation(q);
  return q;
}

PhotonPolynomial drop_contact_terms(const PhotonPolynomial& poly) {
  std::vector<PolyTerm> kept;
  for (const PolyTerm& t : poly.terms()) {
    if (t.pow_d == 0) kept.push_back(t);
  }
  return PhotonPolynomial::from_terms(poly.photon_count(), std::move(kept));
}

std::complex<double> evaluate_prefactor(const PhotonPolynomial& poly,
                                        std::complex<double> a,
                                        double pbar_abs) {
  if (!poly.contact_free()) {
    throw config_error(
        "polynomial carries contact terms; apply drop_contact_terms before "
        "numeric evaluation (the contact symbol has no lattice value)");
  }
  std::complex<double> sum(0.0, 0.0);
  for (const PolyTerm& t : poly.terms()) {
    sum += static_cast<double>(t.coeff) * std::pow(pbar_abs, t.pow_pbar) *
           std::pow(a, t.pow_a);
  }
  return sum;
}

}  // namespace photonlab
