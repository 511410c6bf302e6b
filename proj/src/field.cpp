#include "photonlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace photonlab {

namespace {

size_t slot_of(const GridSpec& grid, int k) {
  const int n = grid.n_modes();
  return static_cast<size_t>(((k % n) + n) % n);
}

}  // namespace

RealField RealField::zero(const GridSpec& grid) {
  return RealField(grid, std::vector<double>(grid.n_modes(), 0.0));
}

RealField RealField::from_values(const GridSpec& grid,
                                 std::vector<double> values) {
  if (values.size() != static_cast<size_t>(grid.n_modes())) {
    throw config_error("field length " + std::to_string(values.size()) +
                       " does not match grid n_modes " +
                       std::to_string(grid.n_modes()));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw config_error("field values must be finite");
  }
  return RealField(grid, std::move(values));
}

SpectralField SpectralField::zero(const GridSpec& grid) {
  return SpectralField(
      grid, std::vector<complexd>(static_cast<size_t>(grid.max_mode()) + 1));
}

SpectralField SpectralField::from_half(const GridSpec& grid,
                                       std::vector<complexd> half) {
  if (half.size() != static_cast<size_t>(grid.max_mode()) + 1) {
    throw config_error("half-spectrum length must be max_mode + 1");
  }
  for (const complexd& z : half) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw config_error("amplitudes must be finite");
    }
  }
  if (!grid.include_zero_mode() && half[0] != complexd(0.0, 0.0)) {
    throw config_error("zero mode is excluded by the grid and must be zero");
  }
  if (grid.include_zero_mode() && half[0].imag() != 0.0) {
    throw config_error("zero-mode amplitude must be real");
  }
  return SpectralField(grid, std::move(half));
}

SpectralField SpectralField::from_amplitudes(
    const GridSpec& grid, const std::vector<complexd>& fft_order) {
  const int n = grid.n_modes();
  if (fft_order.size() != static_cast<size_t>(n)) {
    throw config_error("amplitude array length must equal n_modes");
  }
  double scale = 0.0;
  for (const complexd& z : fft_order) scale = std::max(scale, std::abs(z));
  double residue = 0.0;
  for (int k = 1; k <= grid.max_mode(); ++k) {
    residue = std::max(residue, std::abs(fft_order[slot_of(grid, k)] -
                                         std::conj(fft_order[slot_of(grid, -k)])));
  }
  residue = std::max(residue, std::abs(fft_order[slot_of(grid, 0)].imag()));
  if (scale > 0.0 && residue > 1e-12 * scale) {
    throw config_error("Hermitian symmetry violated: residue " +
                       std::to_string(residue) + " at field scale " +
                       std::to_string(scale));
  }
  const size_t nyquist = static_cast<size_t>(n / 2);
  if (std::abs(fft_order[nyquist]) != 0.0) {
    throw config_error("unpaired Nyquist mode must be zero");
  }
  if (!grid.include_zero_mode() && std::abs(fft_order[0]) != 0.0) {
    throw config_error("zero mode is excluded by the grid and must be zero");
  }
  std::vector<complexd> half(static_cast<size_t>(grid.max_mode()) + 1);
  half[0] = complexd(fft_order[0].real(), 0.0);
  for (int k = 1; k <= grid.max_mode(); ++k) {
    // canonicalize the pair to exact symmetry
    half[static_cast<size_t>(k)] =
        0.5 * (fft_order[slot_of(grid, k)] +
               std::conj(fft_order[slot_of(grid, -k)]));
  }
  return SpectralField(grid, std::move(half));
}

SpectralField SpectralField::from_pairs(
    const GridSpec& grid, const std::vector<std::pair<int, complexd>>& pairs) {
  std::vector<complexd> half(static_cast<size_t>(grid.max_mode()) + 1);
  for (const auto& [k, z] : pairs) {
    if (!grid.retained(k)) {
      throw config_error("mode " + std::to_string(k) +
                         " is not retained by the grid");
    }
    if (k == 0) {
      if (z.imag() != 0.0) {
        throw config_error("zero-mode amplitude must be real");
      }
      half[0] += z;
    } else if (k > 0) {
      half[static_cast<size_t>(k)] += z;
    } else {
      half[static_cast<size_t>(-k)] += std::conj(z);
    }
  }
  return from_half(grid, std::move(half));
}

complexd SpectralField::amplitude(int k) const {
  if (!grid_.retained(k)) return complexd(0.0, 0.0);
  if (k >= 0) return half_[static_cast<size_t>(k)];
  return std::conj(half_[static_cast<size_t>(-k)]);
}

DensityField DensityField::zero(const GridSpec& grid) {
  return DensityField(
      grid, std::vector<double>(static_cast<size_t>(grid.max_mode()) + 1));
}

DensityField DensityField::from_half(const GridSpec& grid,
                                     std::vector<double> half) {
  if (half.size() != static_cast<size_t>(grid.max_mode()) + 1) {
    throw config_error("half-density length must be max_mode + 1");
  }
  for (double v : half) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw config_error("density values must be finite and nonnegative");
    }
  }
  if (!grid.include_zero_mode() && half[0] != 0.0) {
    throw config_error("zero mode is excluded by the grid and must be zero");
  }
  return DensityField(grid, std::move(half));
}

DensityField DensityField::from_values(const GridSpec& grid,
                                       const std::vector<double>& fft_order) {
  const int n = grid.n_modes();
  if (fft_order.size() != static_cast<size_t>(n)) {
    throw config_error("density array length must equal n_modes");
  }
  for (int k = 1; k <= grid.max_mode(); ++k) {
    if (fft_order[slot_of(grid, k)] != fft_order[slot_of(grid, -k)]) {
      throw config_error("density must be even: D(-p) = D(p) exactly");
    }
  }
  if (fft_order[static_cast<size_t>(n / 2)] != 0.0) {
    throw config_error("unpaired Nyquist mode must be zero");
  }
  std::vector<double> half(fft_order.begin(),
                           fft_order.begin() + grid.max_mode() + 1);
  return from_half(grid, std::move(half));
}

double DensityField::value(int k) const {
  if (!grid_.retained(k)) return 0.0;
  return half_[static_cast<size_t>(std::abs(k))];
}

}  // namespace photonlab
