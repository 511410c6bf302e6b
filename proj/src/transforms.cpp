#include "photonlab/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace photonlab {

namespace {

// The FFTW planner is not thread safe; plan creation and destruction are
// serialized, execution is not.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwReal {
  explicit FftwReal(size_t n)
      : data(static_cast<double*>(fftw_malloc(sizeof(double) * n))) {}
  ~FftwReal() { fftw_free(data); }
  double* data;
};

struct FftwComplex {
  explicit FftwComplex(size_t n) : data(fftw_alloc_complex(n)) {}
  ~FftwComplex() { fftw_free(data); }
  fftw_complex* data;
};

// out[k] = sum_j in[j] exp(-2 pi i j k / N), k = 0..N/2
void dft_r2c(std::span<const double> in, std::vector<complexd>& out) {
  const size_t n = in.size();
  FftwReal buf_in(n);
  FftwComplex buf_out(n / 2 + 1);
  std::copy(in.begin(), in.end(), buf_in.data);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), buf_in.data, buf_out.data,
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  out.resize(n / 2 + 1);
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] = complexd(buf_out.data[k][0], buf_out.data[k][1]);
  }
}

// out[j] = sum_k(half-complex in, implicit conjugate symmetry) exp(+2 pi i j k / N)
void dft_c2r(std::span<const complexd> in, size_t n, std::vector<double>& out) {
  FftwComplex buf_in(n / 2 + 1);
  FftwReal buf_out(n);
  for (size_t k = 0; k < n / 2 + 1; ++k) {
    buf_in.data[k][0] = in[k].real();
    buf_in.data[k][1] = in[k].imag();
  }
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), buf_in.data, buf_out.data,
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  out.assign(buf_out.data, buf_out.data + n);
}

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

}  // namespace

SpectralField forward_transform(const RealField& field) {
  const GridSpec& grid = field.grid();
  std::vector<complexd> raw;
  dft_r2c(field.values(), raw);
  const double scale = grid.dx() * kInvSqrt2Pi;
  std::vector<complexd> half(static_cast<size_t>(grid.max_mode()) + 1);
  if (grid.include_zero_mode()) {
    half[0] = complexd(raw[0].real() * scale, 0.0);
  }
  for (int k = 1; k <= grid.max_mode(); ++k) {
    half[static_cast<size_t>(k)] = raw[static_cast<size_t>(k)] * scale;
  }
  return SpectralField::from_half(grid, std::move(half));
}

RealField inverse_transform(const SpectralField& spec) {
  const GridSpec& grid = spec.grid();
  const size_t n = static_cast<size_t>(grid.n_modes());
  const double scale = grid.dp() * kInvSqrt2Pi;
  std::vector<complexd> half(n / 2 + 1);
  for (int k = 0; k <= grid.max_mode(); ++k) {
    half[static_cast<size_t>(k)] = spec.amplitude(k) * scale;
  }
  // Nyquist slot stays zero
  std::vector<double> values;
  dft_c2r(half, n, values);
  return RealField::from_values(grid, std::move(values));
}

double parseval_energy(const RealField& field) {
  double sum = 0.0;
  for (double v : field.values()) sum += v * v;
  return sum * field.grid().dx();
}

double spectral_energy(const SpectralField& spec) {
  const GridSpec& grid = spec.grid();
  double sum = std::norm(spec.amplitude(0));
  for (int k = 1; k <= grid.max_mode(); ++k) {
    sum += 2.0 * std::norm(spec.amplitude(k));
  }
  return sum * grid.dp();
}

DensityField spectral_density(const SpectralField& spec) {
  const GridSpec& grid = spec.grid();
  std::vector<double> half(static_cast<size_t>(grid.max_mode()) + 1);
  for (int k = 0; k <= grid.max_mode(); ++k) {
    half[static_cast<size_t>(k)] = std::norm(spec.amplitude(k));
  }
  return DensityField::from_half(grid, std::move(half));
}

RealField autocorrelation(const DensityField& density) {
  const GridSpec& grid = density.grid();
  const size_t n = static_cast<size_t>(grid.n_modes());
  std::vector<complexd> half(n / 2 + 1);
  for (int k = 0; k <= grid.max_mode(); ++k) {
    half[static_cast<size_t>(k)] = complexd(density.value(k) * grid.dp(), 0.0);
  }
  std::vector<double> values;
  dft_c2r(half, n, values);
  // lag symmetry R(-x) = R(x) holds in exact arithmetic; pin it exactly
  for (size_t l = 1; l < n - l; ++l) {
    const double avg = 0.5 * (values[l] + values[n - l]);
    values[l] = avg;
    values[n - l] = avg;
  }
  return RealField::from_values(grid, std::move(values));
}

}  // namespace photonlab
