#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "photonlab/sampler.hpp"
#include "photonlab/stats.hpp"
#include "photonlab/transforms.hpp"

using namespace photonlab;

namespace {

// dp = 0.1 with mode 10 at omega = 1, small enough for fast ensembles
GridSpec small_grid() { return GridSpec(64, 20.0 * std::numbers::pi); }

constexpr int kBar = 10;

EnsembleSpec make_spec(const GridSpec& grid, const PhotonContent& content,
                       std::uint64_t samples, std::uint64_t seed,
                       std::uint32_t batches = 16) {
  return EnsembleSpec{grid, content, samples, seed, batches, 0};
}

}  // namespace

TEST_CASE("stream determinism and exact pair symmetry") {
  const GridSpec grid = small_grid();
  const SampleStream a(
      make_spec(grid, PhotonContent::single(kBar, 2), 100, 991));
  const SampleStream b(
      make_spec(grid, PhotonContent::single(kBar, 2), 100, 991));
  for (std::uint64_t i : {0ull, 7ull, 99ull}) {
    const SpectralField fa = a.field(i);
    const SpectralField fb = b.field(i);
    for (int k = 1; k <= grid.max_mode(); ++k) {
      CHECK(fa.amplitude(k) == fb.amplitude(k));  // bit identical
      CHECK(fa.amplitude(-k) == std::conj(fa.amplitude(k)));
    }
  }
  const SampleStream c(
      make_spec(grid, PhotonContent::single(kBar, 2), 100, 992));
  CHECK(c.field(0).amplitude(kBar) != a.field(0).amplitude(kBar));
}

TEST_CASE("statistics are invariant under the batch partition") {
  const GridSpec grid = small_grid();
  const EnsembleStats s16 = estimate_density(
      SampleStream(make_spec(grid, PhotonContent::single(kBar, 1), 4000, 5, 16)));
  const EnsembleStats s7 = estimate_density(
      SampleStream(make_spec(grid, PhotonContent::single(kBar, 1), 4000, 5, 7)));
  for (int k = 1; k <= grid.max_mode(); ++k) {
    const double a = s16.mean_density->value(k);
    const double b = s7.mean_density->value(k);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("vacuum moments match the gaussian law") {
  const GridSpec grid = small_grid();
  const std::uint64_t m = 100000;
  const EnsembleStats stats = estimate_density(
      sample_vacuum(make_spec(grid, PhotonContent::vacuum(), m, 3)));
  int within = 0;
  for (int k = 1; k <= grid.max_mode(); ++k) {
    const double want = 1.0 / (2.0 * grid.omega(k) * grid.dp());
    if (std::abs(stats.mean_density->value(k) - want) <=
        3.0 * stats.density_stderr[static_cast<size_t>(k)]) {
      ++within;
    }
  }
  CHECK(within >= 30);  // at least 95% of the 31 retained modes
  CHECK(within <= grid.max_mode());
  // omega = 1 mode: expected second moment 5.0, cross-checked by quadrature
  const double want = oracles::quadrature_radial_mean(
      0, 2.0 * grid.omega(kBar) * grid.dp());
  CHECK(want == doctest::Approx(5.0).epsilon(1e-6));
  CHECK(std::abs(stats.mean_density->value(kBar) - want) <=
        3.0 * stats.density_stderr[kBar]);

  // phase symmetry: mean amplitude vanishes
  const SampleStream stream(
      make_spec(grid, PhotonContent::vacuum(), 20000, 7777));
  complexd mean(0.0, 0.0);
  double var = 0.0;
  for (std::uint64_t i = 0; i < 20000; ++i) {
    const complexd z = stream.field(i).amplitude(kBar);
    mean += z;
    var += std::norm(z);
  }
  mean /= 20000.0;
  const double se = std::sqrt(var / 20000.0 / 20000.0 / 2.0);
  CHECK(std::abs(mean.real()) < 3.0 * se);
  CHECK(std::abs(mean.imag()) < 3.0 * se);
}

TEST_CASE("distinct modes are uncorrelated") {
  const GridSpec grid = small_grid();
  const std::uint64_t m = 20000;
  const SampleStream stream(
      make_spec(grid, PhotonContent::vacuum(), m, 31415));
  const auto correlate = [&](int k1, int k2) {
    double s1 = 0, s2 = 0, s11 = 0, s22 = 0, s12 = 0;
    for (std::uint64_t i = 0; i < m; ++i) {
      const SpectralField f = stream.field(i);
      const double a = std::norm(f.amplitude(k1));
      const double b = std::norm(f.amplitude(k2));
      s1 += a;
      s2 += b;
      s11 += a * a;
      s22 += b * b;
      s12 += a * b;
    }
    const double n = static_cast<double>(m);
    const double cov = s12 / n - (s1 / n) * (s2 / n);
    const double va = s11 / n - (s1 / n) * (s1 / n);
    const double vb = s22 / n - (s2 / n) * (s2 / n);
    return cov / std::sqrt(va * vb);
  };
  const double bound = 3.0 / std::sqrt(static_cast<double>(m));
  CHECK(std::abs(correlate(3, 17)) < bound);
  CHECK(std::abs(correlate(10, 11)) < bound);
}

TEST_CASE("photon mode carries the gamma radial law") {
  const GridSpec grid = small_grid();
  const double rate = 2.0 * grid.omega(kBar) * grid.dp();  // 0.2

  SUBCASE("means for 1 and 4 photons") {
    for (int n : {1, 4}) {
      const std::uint64_t m = 100000;
      const EnsembleStats stats = estimate_density(sample_photons(
          make_spec(grid, PhotonContent::single(kBar, n), m, 555 + n)));
      const double want = (n + 1.0) / rate;  // 10.0 and 25.0
      CHECK(std::abs(stats.mean_density->value(kBar) - want) <=
            3.0 * stats.density_stderr[kBar]);
      // off-photon modes stay at the vacuum level
      int within = 0;
      for (int k = 1; k <= grid.max_mode(); ++k) {
        if (k == kBar) continue;
        const double vac = 1.0 / (2.0 * grid.omega(k) * grid.dp());
        if (std::abs(stats.mean_density->value(k) - vac) <=
            3.0 * stats.density_stderr[static_cast<size_t>(k)]) {
          ++within;
        }
      }
      CHECK(within >= 29);  // at least 95% of the 30 off-photon modes
      // evenness of the estimate is exact by conjugate pairing
      CHECK(stats.mean_density->value(-kBar) ==
            stats.mean_density->value(kBar));
    }
  }

  SUBCASE("accept-reject oracle agrees on the mean") {
    const int n = 3;
    const std::uint64_t m = 40000;
    const SampleStream stream(
        make_spec(grid, PhotonContent::single(kBar, n), m, 606));
    double mean_stream = 0.0;
    for (std::uint64_t i = 0; i < m; ++i) {
      mean_stream += stream.pair_density(i, kBar);
    }
    mean_stream /= static_cast<double>(m);
    Xoshiro256StarStar rng(607);
    double mean_ar = 0.0;
    for (std::uint64_t i = 0; i < m; ++i) {
      mean_ar += oracles::accept_reject_radial(rng, n, rate);
    }
    mean_ar /= static_cast<double>(m);
    // sd of Gamma(4, 0.2) is 10; two independent estimators within 6 se
    const double se = 10.0 / std::sqrt(static_cast<double>(m));
    CHECK(std::abs(mean_stream - mean_ar) < 6.0 * se);
    CHECK(mean_stream ==
          doctest::Approx((n + 1.0) / rate).epsilon(6.0 * se / 20.0));
  }

  SUBCASE("kolmogorov-smirnov against the gamma cdf") {
    const std::uint64_t m = 10000;
    const double crit = ks_critical(0.01, m);
    for (int n : {0, 1, 3}) {
      const PhotonContent content = n == 0 ? PhotonContent::vacuum()
                                           : PhotonContent::single(kBar, n);
      const SampleStream stream(make_spec(grid, content, m, 808 + n));
      std::vector<double> samples(m);
      for (std::uint64_t i = 0; i < m; ++i) {
        samples[i] = stream.pair_density(i, kBar);
      }
      const double d = ks_statistic(
          samples, [&](double x) { return gamma_cdf(n + 1, rate, x); });
      CHECK(d < crit);
    }
  }

  SUBCASE("histogram mode sits at the closed-form maximizer") {
    const int n = 3;
    const std::uint64_t m = 100000;
    const SampleStream stream(
        make_spec(grid, PhotonContent::single(kBar, n), m, 909));
    const double bin = 2.5;
    std::vector<int> hist(40, 0);
    for (std::uint64_t i = 0; i < m; ++i) {
      const double u = stream.pair_density(i, kBar);
      const size_t b = static_cast<size_t>(u / bin);
      if (b < hist.size()) ++hist[b];
    }
    size_t argmax = 0;
    for (size_t b = 1; b < hist.size(); ++b) {
      if (hist[b] > hist[argmax]) argmax = b;
    }
    const double center = (argmax + 0.5) * bin;
    const double want = n / (2.0 * grid.omega(kBar) * grid.dp());  // 15.0
    CHECK(std::abs(center - want) <= 1.5 * bin);
  }
}

TEST_CASE("estimator contracts and refusals") {
  const GridSpec grid = small_grid();
  CHECK_THROWS_AS(
      SampleStream(make_spec(grid, PhotonContent::pair(kBar, -kBar), 10, 1)),
      config_error);
  CHECK_THROWS_AS(
      sample_vacuum(make_spec(grid, PhotonContent::single(kBar, 1), 10, 1)),
      config_error);
  CHECK_THROWS_AS(
      sample_photons(make_spec(grid, PhotonContent::vacuum(), 10, 1)),
      config_error);
  CHECK_THROWS_AS(
      estimate_density(
          SampleStream(make_spec(grid, PhotonContent::vacuum(), 1, 1))),
      config_error);
  CHECK_THROWS_AS(
      SampleStream(make_spec(GridSpec(64, 20.0 * std::numbers::pi),
                             PhotonContent::single(40, 1), 10, 1)),
      config_error);  // off-grid mode on this lattice (max 31)
}

TEST_CASE("autocorrelation estimator") {
  const GridSpec grid = small_grid();
  const std::uint64_t m = 2000;

  SUBCASE("zero lag reproduces the mean parseval energy") {
    const SampleStream stream(
        make_spec(grid, PhotonContent::single(kBar, 1), m, 4242));
    const EnsembleStats stats = estimate_autocorrelation(stream);
    double mean_energy = 0.0;
    for (std::uint64_t i = 0; i < m; ++i) {
      mean_energy += parseval_energy(inverse_transform(stream.field(i)));
    }
    mean_energy /= static_cast<double>(m);
    CHECK(std::abs(stats.mean_autocorr->value(0) - mean_energy) <
          1e-10 * mean_energy);
    // exact lag symmetry
    for (int j = 1; j < grid.n_modes(); ++j) {
      CHECK(stats.mean_autocorr->value(j) ==
            stats.mean_autocorr->value(grid.n_modes() - j));
    }
  }

  SUBCASE("photon excess over vacuum follows the cosine template") {
    const std::uint64_t big = 100000;
    const EnsembleStats photon = estimate_autocorrelation(SampleStream(
        make_spec(grid, PhotonContent::single(kBar, 1), big, 1001)));
    const EnsembleStats vacuum = estimate_autocorrelation(SampleStream(
        make_spec(grid, PhotonContent::vacuum(), big, 1002)));
    double sxy = 0, sxx = 0, syy = 0, sx = 0, sy = 0;
    const int n = grid.n_modes();
    for (int j = 0; j < n; ++j) {
      const double x = std::cos(grid.momentum(kBar) * grid.position(j));
      const double y =
          photon.mean_autocorr->value(j) - vacuum.mean_autocorr->value(j);
      sx += x;
      sy += y;
      sxx += x * x;
      syy += y * y;
      sxy += x * y;
    }
    const double corr = (sxy - sx * sy / n) /
                        std::sqrt((sxx - sx * sx / n) * (syy - sy * sy / n));
    CHECK(corr > 0.99);
  }
}
