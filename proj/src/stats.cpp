#include "photonlab/stats.hpp"

#include <algorithm>
#include <cmath>

#include "photonlab/errors.hpp"

namespace photonlab {

double gamma_cdf(int shape, double rate, double x) {
  if (shape < 1) throw config_error("gamma_cdf needs integer shape >= 1");
  if (x <= 0.0) return 0.0;
  const double y = rate * x;
  // P(shape, y) = 1 - exp(-y) sum_{j<shape} y^j / j!
  double term = 1.0;
  double sum = 1.0;
  for (int j = 1; j < shape; ++j) {
    term *= y / j;
    sum += term;
  }
  return 1.0 - std::exp(-y) * sum;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) throw config_error("ks_statistic needs samples");
  std::sort(samples.begin(), samples.end());
  const double m = static_cast<double>(samples.size());
  double d = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, (i + 1) / m - f);
    d = std::max(d, f - i / m);
  }
  return d;
}

double ks_critical(double alpha, std::size_t m) {
  if (!(alpha > 0.0 && alpha < 1.0) || m == 0) {
    throw config_error("ks_critical needs 0 < alpha < 1 and m > 0");
  }
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) /
         std::sqrt(static_cast<double>(m));
}

}  // namespace photonlab
