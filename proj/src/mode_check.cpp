#include "photonlab/mode_check.hpp"

#include <cmath>
#include <vector>

#include "photonlab/errors.hpp"

namespace photonlab {

double mode_eigenvalue_check(int n, double omega,
                             const ModeCheckOptions& opts) {
  if (n < 0 || n > 12) {
    throw config_error(
        "mode_eigenvalue_check supports 0 <= n <= 12 (finite-difference "
        "conditioning degrades beyond that)");
  }
  if (!(omega > 0.0)) throw config_error("omega must be positive");
  if (!(opts.measure > 0.0) || !(opts.step > 0.0) || !(opts.r_lo > 0.0)) {
    throw config_error("measure, step and r_lo must be positive");
  }

  const long double dp = opts.measure;
  const long double alpha = omega * dp;  // Gaussian width of the pair mode
  const long double h = opts.step;
  long double r_hi = opts.r_hi;
  if (r_hi <= 0.0) {
    // far enough out that f is negligible relative to its maximum
    r_hi = std::sqrt((0.5L * n + 45.0L) / alpha);
  }
  if (r_hi <= opts.r_lo) throw config_error("r_hi must exceed r_lo");

  const auto f = [&](long double r) -> long double {
    return std::pow(r, static_cast<long double>(n)) * std::exp(-alpha * r * r);
  };

  const size_t m = static_cast<size_t>((r_hi - opts.r_lo) / h) + 1;
  std::vector<long double> values(m);
  for (size_t i = 0; i < m; ++i) values[i] = f(opts.r_lo + i * h);

  long double fmax = 0.0;
  for (long double v : values) fmax = std::max(fmax, std::abs(v));

  const long double energy = (n + 1.0L) * omega;
  const long double kin = 1.0L / (4.0L * dp);
  long double worst = 0.0;
  for (size_t i = 1; i + 1 < m; ++i) {
    const long double r = opts.r_lo + i * h;
    const long double d2 = (values[i + 1] - 2.0L * values[i] + values[i - 1]) / (h * h);
    const long double d1 = (values[i + 1] - values[i - 1]) / (2.0L * h);
    const long double radial =
        d2 + d1 / r - static_cast<long double>(n) * n * values[i] / (r * r);
    const long double hf =
        -kin * radial + dp * omega * omega * r * r * values[i];
    worst = std::max(worst, std::abs(hf - energy * values[i]));
  }
  return static_cast<double>(worst / fmax);
}

}  // namespace photonlab
