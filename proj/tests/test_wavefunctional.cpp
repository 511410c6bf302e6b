#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>

#include "oracles.hpp"
#include "photonlab/mode_check.hpp"
#include "photonlab/multimode.hpp"
#include "photonlab/polynomial.hpp"
#include "photonlab/vacuum.hpp"

using namespace photonlab;

namespace {

GridSpec desk_grid() { return GridSpec(128, 20.0 * std::numbers::pi); }

PhotonPolynomial reference(int n) {
  switch (n) {
    case 0:
      return PhotonPolynomial::from_terms(0, {{1, 0, 0, 0}});
    case 1:
      return PhotonPolynomial::from_terms(1, {{2, 1, 0, 1}});
    case 2:
      return PhotonPolynomial::from_terms(2, {{4, 2, 0, 2}, {-2, 0, 1, 1}});
    case 3:
      return PhotonPolynomial::from_terms(3, {{8, 3, 0, 3}, {-12, 1, 1, 2}});
    case 4:
      return PhotonPolynomial::from_terms(
          4, {{16, 4, 0, 4}, {-48, 2, 1, 3}, {12, 0, 2, 2}});
    default:
      throw std::out_of_range("no reference");
  }
}

}  // namespace

TEST_CASE("creation operator recursion reproduces the closed forms") {
  PhotonPolynomial q = PhotonPolynomial::unit();
  CHECK(q == reference(0));
  for (int n = 1; n <= 4; ++n) {
    q = apply_creation(q);
    CHECK(q == reference(n));
    CHECK(q.photon_count() == n);
  }
  for (int n = 0; n <= 4; ++n) {
    CHECK(nphoton_polynomial(n) == reference(n));
  }
  CHECK_THROWS_AS(nphoton_polynomial(-1), config_error);
}

TEST_CASE("homogeneity invariants hold for every generated polynomial") {
  for (int n = 0; n <= 20; ++n) {
    const PhotonPolynomial q = nphoton_polynomial(n);
    CHECK(!q.terms().empty());
    for (const PolyTerm& t : q.terms()) {
      CHECK(t.pow_a + 2 * t.pow_d == n);
      CHECK(t.pow_pbar + t.pow_d == n);
      CHECK(t.coeff != 0);
    }
  }
}

TEST_CASE("scaled Hermite closed form, independent recursion oracle") {
  for (int n = 0; n <= 20; ++n) {
    const PhotonPolynomial q = nphoton_polynomial(n);
    const std::vector<long long> h = oracles::hermite_coefficients(n);
    for (int m = 0; m <= n / 2; ++m) {
      CHECK(q.coefficient(m) == h[static_cast<size_t>(n - 2 * m)]);
    }
  }
  // spot value: the ten-photon prefactor carries the H_10 coefficients
  const PhotonPolynomial q10 = nphoton_polynomial(10);
  CHECK(q10.coefficient(0) == 1024);
  CHECK(q10.coefficient(5) == -30240);
}

TEST_CASE("exact arithmetic overflows loudly instead of wrapping") {
  PhotonPolynomial q = PhotonPolynomial::unit();
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 60; ++i) q = apply_creation(q);
      }(),
      numeric_error);
}

TEST_CASE("contact terms drop to the single surviving monomial") {
  CHECK(drop_contact_terms(nphoton_polynomial(0)) == reference(0));
  CHECK(drop_contact_terms(nphoton_polynomial(2)) ==
        PhotonPolynomial::from_terms(2, {{4, 2, 0, 2}}));
  CHECK(drop_contact_terms(nphoton_polynomial(4)) ==
        PhotonPolynomial::from_terms(4, {{16, 4, 0, 4}}));
  for (int n = 0; n <= 12; ++n) {
    const PhotonPolynomial q = drop_contact_terms(nphoton_polynomial(n));
    REQUIRE(q.terms().size() == 1);
    const PolyTerm& t = q.terms().front();
    CHECK(t.pow_a == n);
    CHECK(t.pow_pbar == n);
    CHECK(t.coeff == (1LL << n));  // (2|p|)^n a^n
    CHECK(q.contact_free());
  }
}

TEST_CASE("canonical and factored renderings") {
  CHECK(nphoton_polynomial(0).canonical_text() == "1");
  CHECK(nphoton_polynomial(0).factored_text() == "1");
  CHECK(nphoton_polynomial(1).canonical_text() == "2|p|a");
  CHECK(nphoton_polynomial(2).canonical_text() == "4|p|^2a^2 - 2|p|d");
  CHECK(nphoton_polynomial(2).factored_text() == "2|p|(2|p|a^2 - d)");
  CHECK(nphoton_polynomial(3).factored_text() == "4|p|^2(2|p|a^3 - 3ad)");
  CHECK(nphoton_polynomial(4).factored_text() ==
        "4|p|^2(4|p|^2a^4 - 12|p|a^2d + 3d^2)");
}

TEST_CASE("json form matches the golden file") {
  std::ifstream in(std::string(PHOTONLAB_TEST_DATA_DIR) +
                   "/polynomials_golden.json");
  REQUIRE(in.good());
  const nlohmann::json golden = nlohmann::json::parse(in);
  for (const auto& entry : golden.at("polynomials")) {
    const int n = entry.at("n").get<int>();
    CHECK(nphoton_polynomial(n).to_json() == entry);
    CHECK(PhotonPolynomial::from_json(entry) == nphoton_polynomial(n));
  }
}

TEST_CASE("two-photon expression transcription and reductions") {
  const GridSpec grid = desk_grid();
  const MultiModeExpression expr = two_photon_expression(grid, 10, 20);
  REQUIRE(expr.terms().size() == 3);
  CHECK(expr.terms()[0] == MultiModeTerm{16, 2, 2, 1, 1, 0, false});
  CHECK(expr.terms()[1] == MultiModeTerm{-8, 1, 1, 0, 0, 1, true});
  CHECK(expr.terms()[2] == MultiModeTerm{4, 2, 0, 0, 0, 2, false});
  CHECK(!expr.counter_propagating());

  SUBCASE("distinct momenta leave only the density product") {
    const auto active = expr.active_terms();
    REQUIRE(active.size() == 1);
    CHECK(active.front() == MultiModeTerm{16, 2, 2, 1, 1, 0, false});
    CHECK(expr.inert(expr.terms()[1]));
    CHECK(expr.inert(expr.terms()[2]));
    CHECK_THROWS_AS(expr.dominant_counter_term(), config_error);
  }

  SUBCASE("counter-propagating pair is dominated by the contact square") {
    const MultiModeExpression cp = two_photon_expression(grid, 10, -10);
    CHECK(cp.counter_propagating());
    const MultiModeTerm dom = cp.dominant_counter_term();
    CHECK(dom == MultiModeTerm{4, 2, 0, 0, 0, 2, false});
    // the middle term carries the phase factor that cancels on this shell
    CHECK(cp.terms()[1].cross);
  }

  SUBCASE("coincident momenta agree with the squared single-mode route") {
    const MultiModeExpression same = two_photon_expression(grid, 10, 10);
    const DensityMonomial via_pair = coincident_density_form(same);
    const DensityMonomial via_poly =
        squared_density_form(drop_contact_terms(nphoton_polynomial(2)));
    CHECK(via_pair == via_poly);
    CHECK(via_pair == DensityMonomial{16, 4, 2});
  }

  CHECK_THROWS_AS(two_photon_expression(grid, 0, 5), config_error);
  CHECK_THROWS_AS(two_photon_expression(grid, 5, 9999), config_error);
}

TEST_CASE("log density evaluation") {
  const GridSpec grid = desk_grid();
  const VacuumGaussian vac(grid);
  const int kbar = 10;  // omega = 1

  SUBCASE("vacuum prefactor at the zero field") {
    CHECK(evaluate_log_density(nphoton_polynomial(0), SpectralField::zero(grid),
                               kbar, vac) == 0.0);
  }

  SUBCASE("one photon at amplitude one-half") {
    const SpectralField field =
        SpectralField::from_pairs(grid, {{-kbar, complexd(0.5, 0.0)}});
    const PhotonPolynomial q1 = nphoton_polynomial(1);
    // prefactor 2 * 1 * 0.5 = 1, so only the exponent survives
    CHECK(evaluate_prefactor(q1, field.amplitude(-kbar), 1.0) ==
          complexd(1.0, 0.0));
    const double want = -2.0 * 1.0 * 0.25 * grid.dp();
    CHECK(evaluate_log_density(q1, field, kbar, vac) ==
          doctest::Approx(want).epsilon(1e-14));
  }

  SUBCASE("contact terms are refused") {
    CHECK_THROWS_AS(evaluate_log_density(nphoton_polynomial(2),
                                         SpectralField::zero(grid), kbar, vac),
                    config_error);
  }

  SUBCASE("ratios match the direct-summation oracle") {
    Xoshiro256StarStar rng(31);
    for (int n : {1, 3}) {
      const PhotonPolynomial q = drop_contact_terms(nphoton_polynomial(n));
      std::vector<complexd> half(static_cast<size_t>(grid.max_mode()) + 1);
      for (int k = 1; k <= grid.max_mode(); ++k) {
        half[static_cast<size_t>(k)] =
            complexd(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
      }
      const SpectralField field = SpectralField::from_half(grid, half);
      // reference point: the spike-only configuration
      const SpectralField peak =
          SpectralField::from_pairs(grid, {{-kbar, complexd(1.5, 0.0)}});
      const double got = evaluate_log_density(q, field, kbar, vac) -
                         evaluate_log_density(q, peak, kbar, vac);
      const double want = oracles::direct_log_density(field, kbar, n) -
                          oracles::direct_log_density(peak, kbar, n);
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
  }

  SUBCASE("phase rotation of the photon mode leaves the density unchanged") {
    const PhotonPolynomial q = drop_contact_terms(nphoton_polynomial(2));
    const SpectralField base =
        SpectralField::from_pairs(grid, {{kbar, complexd(0.9, -0.4)}});
    const double ref = evaluate_log_density(q, base, kbar, vac);
    for (double theta : {0.3, 1.1, 2.9}) {
      const complexd rotated =
          complexd(0.9, -0.4) * std::polar(1.0, theta);
      const SpectralField field =
          SpectralField::from_pairs(grid, {{kbar, rotated}});
      CHECK(evaluate_log_density(q, field, kbar, vac) ==
            doctest::Approx(ref).epsilon(1e-12));
    }
  }

  SUBCASE("vanishing prefactor gives -inf as a value") {
    const PhotonPolynomial q = drop_contact_terms(nphoton_polynomial(1));
    CHECK(std::isinf(evaluate_log_density(q, SpectralField::zero(grid), kbar,
                                          vac)));
  }
}

TEST_CASE("vacuum gaussian weight") {
  const GridSpec grid = desk_grid();
  const VacuumGaussian vac(grid);
  CHECK(vac.log_weight(SpectralField::zero(grid)) == 0.0);
  const SpectralField field =
      SpectralField::from_pairs(grid, {{10, complexd(2.0, 0.0)}});
  // -1/2 * (omega * 4 at +k and -k) * dp = -0.4
  CHECK(vac.log_weight(field) == doctest::Approx(-0.4).epsilon(1e-14));
}

TEST_CASE("single-pair eigenvalue residual is second order in the step") {
  ModeCheckOptions opts;  // measure 0.1, step 1e-3
  SUBCASE("ground state") {
    const double res = mode_eigenvalue_check(0, 1.0, opts);
    CHECK(res < 1e-6);
    ModeCheckOptions doubled = opts;
    doubled.step = 2.0 * opts.step;
    const double res2 = mode_eigenvalue_check(0, 1.0, doubled);
    CHECK(res2 / res == doctest::Approx(4.0).epsilon(0.15));
  }
  SUBCASE("one quantum") {
    const double res = mode_eigenvalue_check(1, 1.0, opts);
    CHECK(res < 1e-5);
    ModeCheckOptions doubled = opts;
    doubled.step = 2.0 * opts.step;
    CHECK(mode_eigenvalue_check(1, 1.0, doubled) / res ==
          doctest::Approx(4.0).epsilon(0.15));
  }
  SUBCASE("contract bounds") {
    CHECK_THROWS_AS(mode_eigenvalue_check(13, 1.0), config_error);
    CHECK_THROWS_AS(mode_eigenvalue_check(-1, 1.0), config_error);
    CHECK_THROWS_AS(mode_eigenvalue_check(0, 0.0), config_error);
  }
}
