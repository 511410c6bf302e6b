#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "photonlab/grid.hpp"

namespace photonlab {

using complexd = std::complex<double>;

// Real-space field A(x_j), j = 0..N-1. Immutable after construction.
class RealField {
 public:
  static RealField zero(const GridSpec& grid);
  static RealField from_values(const GridSpec& grid,
                               std::vector<double> values);

  const GridSpec& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double value(int j) const { return values_[static_cast<size_t>(j)]; }

 private:
  RealField(GridSpec grid, std::vector<double> values)
      : grid_(grid), values_(std::move(values)) {}

  GridSpec grid_;
  std::vector<double> values_;
};

// Momentum-space amplitudes with the reality condition A~(-p) = conj(A~(p))
// canonical by construction: only k = 0..max_mode is stored, negative modes
// derive by conjugation, excluded modes (zero mode unless included, Nyquist)
// are identically zero.
class SpectralField {
 public:
  static SpectralField zero(const GridSpec& grid);

  // half[k] = A~(p_k) for k = 0..max_mode. Excluded modes must be zero.
  static SpectralField from_half(const GridSpec& grid,
                                 std::vector<complexd> half);

  // Full mode set in fft slot order (slot = k mod N). Validates Hermitian
  // symmetry to 1e-12 relative and canonicalizes it to exact; excluded slots
  // must be exactly zero.
  static SpectralField from_amplitudes(const GridSpec& grid,
                                       const std::vector<complexd>& fft_order);

  // Convenience: set A~(k) = z (and A~(-k) = conj(z)) for the listed modes,
  // zero elsewhere.
  static SpectralField from_pairs(
      const GridSpec& grid,
      const std::vector<std::pair<int, complexd>>& pairs);

  const GridSpec& grid() const { return grid_; }
  std::span<const complexd> half() const { return half_; }

  // Amplitude at any signed mode index; excluded or out-of-range modes
  // read as zero.
  complexd amplitude(int k) const;

 private:
  SpectralField(GridSpec grid, std::vector<complexd> half)
      : grid_(grid), half_(std::move(half)) {}

  GridSpec grid_;
  std::vector<complexd> half_;  // size max_mode + 1
};

// Nonnegative even spectral density D(p_k) = |A~(p_k)|^2. Evenness
// D(-p) = D(p) is exact: only k >= 0 is stored.
class DensityField {
 public:
  static DensityField zero(const GridSpec& grid);

  // half[k] = D(p_k) for k = 0..max_mode; nonnegative, excluded modes zero.
  static DensityField from_half(const GridSpec& grid,
                                std::vector<double> half);

  // Full fft-order set; evenness must hold exactly.
  static DensityField from_values(const GridSpec& grid,
                                  const std::vector<double>& fft_order);

  const GridSpec& grid() const { return grid_; }
  std::span<const double> half() const { return half_; }
  double value(int k) const;

 private:
  DensityField(GridSpec grid, std::vector<double> half)
      : grid_(grid), half_(std::move(half)) {}

  GridSpec grid_;
  std::vector<double> half_;  // size max_mode + 1
};

}  // namespace photonlab
