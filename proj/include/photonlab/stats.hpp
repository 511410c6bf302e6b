#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace photonlab {

// Regularized lower incomplete gamma P(shape, rate * x) for integer shape,
// the CDF of Gamma(shape, rate). Uses the closed Poisson-sum form.
double gamma_cdf(int shape, double rate, double x);

// Two-sided Kolmogorov-Smirnov statistic of the samples against cdf.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

// Asymptotic critical value c(alpha) / sqrt(m), c = sqrt(-ln(alpha/2) / 2).
double ks_critical(double alpha, std::size_t m);

}  // namespace photonlab
