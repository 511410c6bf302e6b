#include "photonlab/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "photonlab/transforms.hpp"

namespace photonlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// photons per |k|, validated against the grid
std::vector<int> counts_by_abs_mode(const GridSpec& grid,
                                    const PhotonContent& content) {
  content.validate_on(grid);
  std::vector<int> counts(static_cast<size_t>(grid.max_mode()) + 1, 0);
  for (const PhotonEntry& e : content.entries()) {
    counts[static_cast<size_t>(std::abs(e.mode))] += e.count;
  }
  return counts;
}

}  // namespace

nlohmann::json to_json(const MaximizerReport& report,
                       const PhotonContent& content) {
  return nlohmann::json{{"content", content.to_json()},
                        {"method", report.method},
                        {"log_prob", report.log_prob},
                        {"iterations", report.iterations},
                        {"residual", report.residual},
                        {"converged", report.converged}};
}

double log_probability(const DensityField& density,
                       const PhotonContent& content) {
  const GridSpec& grid = density.grid();
  content.validate_on(grid);
  double log_term = 0.0;
  for (const PhotonEntry& e : content.entries()) {
    const double dbar = density.value(e.mode);  // even, so Dbar = D
    if (dbar == 0.0) return kNegInf;
    log_term += e.count * std::log(dbar);
  }
  double exponent = grid.include_zero_mode()
                        ? grid.omega(0) * density.value(0)
                        : 0.0;
  for (int k = 1; k <= grid.max_mode(); ++k) {
    exponent += 2.0 * grid.omega(k) * density.value(k);
  }
  return log_term - exponent * grid.dp();
}

MaximizerReport most_likely_density(const GridSpec& grid,
                                    const PhotonContent& content) {
  content.validate_on(grid);
  if (content.counter_propagating()) {
    throw config_error(
        "counter-propagating pair has no spiked maximizer; use "
        "counter_propagating_extremum");
  }
  std::vector<double> half(static_cast<size_t>(grid.max_mode()) + 1, 0.0);
  for (const PhotonEntry& e : content.entries()) {
    const int k = std::abs(e.mode);
    half[static_cast<size_t>(k)] +=
        e.count / (2.0 * grid.omega(k) * grid.dp());
  }
  DensityField density = DensityField::from_half(grid, std::move(half));
  return MaximizerReport{density, log_probability(density, content),
                         "closed_form", 0, 0.0, true};
}

DensityField flat_density(const GridSpec& grid, double value) {
  std::vector<double> half(static_cast<size_t>(grid.max_mode()) + 1, value);
  if (!grid.include_zero_mode()) half[0] = 0.0;
  return DensityField::from_half(grid, std::move(half));
}

MaximizerReport ascent_maximize(const GridSpec& grid,
                                const PhotonContent& content,
                                const DensityField& init,
                                const AscentOptions& opts) {
  content.validate_on(grid);
  if (!(init.grid() == grid)) {
    throw config_error("init density grid does not match");
  }
  const std::vector<int> counts = counts_by_abs_mode(grid, content);
  for (int k = 1; k <= grid.max_mode(); ++k) {
    if (counts[static_cast<size_t>(k)] > 0 && init.value(k) <= 0.0) {
      throw config_error(
          "init density must be strictly positive at photon modes");
    }
  }

  const int kmax = grid.max_mode();
  const double dp = grid.dp();
  std::vector<double> v(init.half().begin(), init.half().end());
  if (!grid.include_zero_mode()) v[0] = 0.0;

  const auto assemble = [&](const std::vector<double>& half) {
    return DensityField::from_half(grid, half);
  };
  const auto objective = [&](const std::vector<double>& half) {
    return log_probability(assemble(half), content);
  };
  // gradient of the objective with respect to the half-space variables:
  // both +-k move together, so each carries twice the per-mode exponent
  // slope (the zero mode is unpaired)
  const auto gradient = [&](const std::vector<double>& half,
                            std::vector<double>& g) {
    g.assign(half.size(), 0.0);
    if (grid.include_zero_mode()) g[0] = -grid.omega(0) * dp;
    for (int k = 1; k <= kmax; ++k) {
      const size_t i = static_cast<size_t>(k);
      g[i] = -2.0 * grid.omega(k) * dp;
      if (counts[i] > 0) g[i] += counts[i] / half[i];
    }
  };
  const auto proj_residual = [&](const std::vector<double>& half,
                                 const std::vector<double>& g) {
    double r = 0.0;
    for (size_t i = grid.include_zero_mode() ? 0 : 1; i < half.size(); ++i) {
      r = std::max(r, half[i] > 0.0 ? std::abs(g[i]) : std::max(g[i], 0.0));
    }
    return r;
  };

  double step = opts.step;
  double fval = objective(v);
  std::vector<double> g, gt, trial;
  std::uint64_t iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    gradient(v, g);
    const double residual = proj_residual(v, g);
    if (residual <= opts.tol) {
      return MaximizerReport{assemble(v), fval, "ascent", iter, residual,
                             true};
    }
    // Near the maximum the objective flattens below double resolution while
    // the gradient is still measurable, so a step is also accepted when the
    // objective is flat to rounding noise and the projected residual shrinks.
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                         (1.0 + std::abs(fval));
    bool moved = false;
    while (step > 1e-300) {
      trial = v;
      for (size_t i = grid.include_zero_mode() ? 0 : 1; i < v.size(); ++i) {
        trial[i] = std::max(0.0, v[i] + step * g[i]);
      }
      const double ftrial = objective(trial);
      bool accept = ftrial > fval;
      if (!accept && ftrial >= fval - noise) {
        gradient(trial, gt);
        accept = proj_residual(trial, gt) < residual;
      }
      if (accept) {
        v.swap(trial);
        fval = ftrial;
        step *= 2.0;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;  // no acceptable step at any size, report as-is below
  }
  gradient(v, g);
  const double residual = proj_residual(v, g);
  return MaximizerReport{assemble(v), fval,     "ascent",
                         iter,        residual, residual <= opts.tol};
}

CounterPropagatingReport counter_propagating_extremum(const GridSpec& grid,
                                                      int kbar) {
  grid.require_photon_mode(kbar);
  // Dominant-term log density is a pure decaying exponential in D, so the
  // derivative along each density coordinate at D = 0 is -omega_k dp.
  std::vector<double> gradient(static_cast<size_t>(grid.max_mode()) + 1, 0.0);
  bool certified = true;
  for (int k = 0; k <= grid.max_mode(); ++k) {
    if (k == 0 && !grid.include_zero_mode()) continue;  // pinned, infeasible
    gradient[static_cast<size_t>(k)] = -grid.omega(k) * grid.dp();
    certified = certified && gradient[static_cast<size_t>(k)] <= 0.0;
  }
  DensityField density = DensityField::zero(grid);
  MaximizerReport report{density, 0.0, "closed_form", 0, 0.0, true};
  return CounterPropagatingReport{report, std::move(gradient), certified};
}

RealField most_likely_autocorrelation(const GridSpec& grid,
                                      const PhotonContent& content) {
  if (content.counter_propagating()) {
    return RealField::zero(grid);
  }
  return autocorrelation(most_likely_density(grid, content).density);
}

}  // namespace photonlab
