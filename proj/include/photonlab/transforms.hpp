#pragma once

#include "photonlab/field.hpp"

namespace photonlab {

// Symmetric-normalization lattice Fourier pair:
//   A~(p_k) = dx / sqrt(2 pi) * sum_j A(x_j) exp(-i p_k x_j)
//   A(x_j)  = dp / sqrt(2 pi) * sum_k A~(p_k) exp(+i p_k x_j)
// Modes excluded by the grid (zero mode unless included, Nyquist) are
// projected out on the forward leg, so forward/inverse is the identity on
// the retained-mode subspace.
SpectralField forward_transform(const RealField& field);
RealField inverse_transform(const SpectralField& spec);

// Parseval accounting: dx * sum_j A^2 and dp * sum_k |A~|^2 agree on
// transform pairs.
double parseval_energy(const RealField& field);
double spectral_energy(const SpectralField& spec);

// D(p_k) = |A~(p_k)|^2, even by construction.
DensityField spectral_density(const SpectralField& spec);

// R(x_j) = dp * sum_k D(p_k) exp(i p_k x_j), real by evenness. Equals the
// dx-weighted circular self-correlation of the real-space field
// (Wiener-Khinchin at lattice level), so R(0) is the spectral energy.
RealField autocorrelation(const DensityField& density);

}  // namespace photonlab
