#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "photonlab/errors.hpp"

namespace photonlab {

// One monomial coeff * |p|^pow_pbar * a^pow_a * d^pow_d of the n-photon
// prefactor, where a stands for the amplitude at the reflected photon mode
// and d for the formal contact symbol produced when the functional
// derivative hits that amplitude. d is never given a numeric value.
struct PolyTerm {
  std::int64_t coeff;
  int pow_a;
  int pow_d;
  int pow_pbar;

  bool operator==(const PolyTerm&) const = default;
};

// Exact integer polynomial prefactor Q_n multiplying the vacuum Gaussian in
// the n-photon wavefunctional. Every term satisfies the homogeneity
// relations pow_a + 2*pow_d = n and pow_pbar + pow_d = n. Terms are kept in
// descending pow_a order; coefficients are exact (overflow throws).
class PhotonPolynomial {
 public:
  // Q_0 = 1
  static PhotonPolynomial unit();
  static PhotonPolynomial from_terms(int photon_count,
                                     std::vector<PolyTerm> terms);

  int photon_count() const { return photon_count_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }

  bool contact_free() const;
  // coefficient of the pow_d = m monomial, 0 if absent
  std::int64_t coefficient(int pow_d) const;

  // expanded form, descending pow_a: "16|p|^4a^4 - 48|p|^3a^2d + 12|p|^2d^2"
  std::string canonical_text() const;
  // common integer and |p| factor pulled out: "4|p|^2(4|p|^2a^4 - ...)"
  std::string factored_text() const;

  // {"n": n, "terms": [{"coeff","pow_a","pow_d","pow_pbar"}...]}
  nlohmann::json to_json() const;
  static PhotonPolynomial from_json(const nlohmann::json& j);

  bool operator==(const PhotonPolynomial&) const = default;

 private:
  PhotonPolynomial(int photon_count, std::vector<PolyTerm> terms)
      : photon_count_(photon_count), terms_(std::move(terms)) {}

  int photon_count_ = 0;
  std::vector<PolyTerm> terms_;
};

// One application of the raising rule Q_n = 2|p| a Q_{n-1} - d dQ_{n-1}/da,
// the action of the creation operator on Q_{n-1} times the vacuum Gaussian.
PhotonPolynomial apply_creation(const PhotonPolynomial& poly);

// Q_n by iterating apply_creation from Q_0 = 1.
PhotonPolynomial nphoton_polynomial(int n);

// Remove every monomial carrying the contact symbol d; legitimate because
// the photon momentum is nonzero. The result is the single monomial
// (2|p|)^n a^n.
PhotonPolynomial drop_contact_terms(const PhotonPolynomial& poly);

// Numeric value of a contact-free polynomial at amplitude a and momentum
// magnitude |p|.
std::complex<double> evaluate_prefactor(const PhotonPolynomial& poly,
                                        std::complex<double> a,
                                        double pbar_abs);

}  // namespace photonlab
