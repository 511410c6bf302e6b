#include "photonlab/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <thread>

#include "photonlab/rng.hpp"
#include "photonlab/transforms.hpp"

namespace photonlab {

namespace {

// radial law |z|^2 ~ Gamma(n + 1, rate) as a sum of exponentials, phase
// uniform; n = 0 reproduces the vacuum complex Gaussian
complexd draw_pair_amplitude(Xoshiro256StarStar& rng, int n, double rate) {
  double radial = 0.0;
  for (int j = 0; j <= n; ++j) radial -= std::log(rng.uniform01());
  radial /= rate;
  const double phase = 2.0 * std::numbers::pi * rng.uniform01();
  const double r = std::sqrt(radial);
  return complexd(r * std::cos(phase), r * std::sin(phase));
}

struct BatchRange {
  std::uint64_t begin;
  std::uint64_t end;
};

std::vector<BatchRange> partition(std::uint64_t count, std::uint32_t batches) {
  batches = std::max<std::uint32_t>(
      1, std::min<std::uint64_t>(batches, count > 0 ? count : 1));
  std::vector<BatchRange> out(batches);
  const std::uint64_t base = count / batches;
  const std::uint64_t rem = count % batches;
  std::uint64_t pos = 0;
  for (std::uint32_t b = 0; b < batches; ++b) {
    const std::uint64_t len = base + (b < rem ? 1 : 0);
    out[b] = BatchRange{pos, pos + len};
    pos += len;
  }
  return out;
}

// run fn(batch_index) over all batches on up to `threads` workers
void for_each_batch(std::size_t n_batches, int threads,
                    const std::function<void(std::size_t)>& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const std::size_t n_threads =
      std::min<std::size_t>(n_batches, threads > 0 ? threads : hw);
  if (n_threads <= 1) {
    for (std::size_t b = 0; b < n_batches; ++b) fn(b);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (std::size_t t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t b = next.fetch_add(1); b < n_batches;
           b = next.fetch_add(1)) {
        fn(b);
      }
    });
  }
  for (auto& th : pool) th.join();
}

// weighted mean over batch means plus the batch-means standard error
struct BatchSummary {
  double mean = 0.0;
  double stderr_ = 0.0;
};

BatchSummary summarize(const std::vector<double>& batch_means,
                       const std::vector<std::uint64_t>& batch_sizes,
                       std::uint64_t total) {
  BatchSummary s;
  for (size_t b = 0; b < batch_means.size(); ++b) {
    s.mean += batch_means[b] * (static_cast<double>(batch_sizes[b]) / total);
  }
  const size_t nb = batch_means.size();
  if (nb >= 2) {
    double ss = 0.0;
    for (double m : batch_means) ss += (m - s.mean) * (m - s.mean);
    s.stderr_ = std::sqrt(ss / (static_cast<double>(nb) * (nb - 1)));
  }
  return s;
}

}  // namespace

SampleStream::SampleStream(EnsembleSpec spec) : spec_(std::move(spec)) {
  spec_.content.validate_on(spec_.grid);
  if (spec_.content.counter_propagating()) {
    throw config_error(
        "counter-propagating pair is unsupported content: its density is "
        "dominated by a squared contact term and is not a normalizable "
        "lattice density; the extremum is certified analytically instead");
  }
  counts_.assign(static_cast<size_t>(spec_.grid.max_mode()) + 1, 0);
  for (const PhotonEntry& e : spec_.content.entries()) {
    counts_[static_cast<size_t>(std::abs(e.mode))] += e.count;
  }
}

std::vector<complexd> SampleStream::draw_half(std::uint64_t index) const {
  const GridSpec& grid = spec_.grid;
  Xoshiro256StarStar rng(substream_seed(spec_.seed, index));
  std::vector<complexd> half(static_cast<size_t>(grid.max_mode()) + 1);
  if (grid.include_zero_mode()) {
    // unpaired real mode, variance 1/(2 omega dp)
    const double sigma = 1.0 / std::sqrt(2.0 * grid.omega(0) * grid.dp());
    const double u1 = rng.uniform01();
    const double u2 = rng.uniform01();
    half[0] = complexd(
        sigma * std::sqrt(-2.0 * std::log(u1)) *
            std::cos(2.0 * std::numbers::pi * u2),
        0.0);
  }
  for (int k = 1; k <= grid.max_mode(); ++k) {
    const double rate = 2.0 * grid.omega(k) * grid.dp();
    half[static_cast<size_t>(k)] =
        draw_pair_amplitude(rng, counts_[static_cast<size_t>(k)], rate);
  }
  return half;
}

SpectralField SampleStream::field(std::uint64_t index) const {
  return SpectralField::from_half(spec_.grid, draw_half(index));
}

double SampleStream::pair_density(std::uint64_t index, int k) const {
  if (!spec_.grid.retained(k)) return 0.0;
  const std::vector<complexd> half = draw_half(index);
  return std::norm(half[static_cast<size_t>(std::abs(k))]);
}

SampleStream sample_vacuum(const EnsembleSpec& spec) {
  if (!spec.content.is_vacuum()) {
    throw config_error("sample_vacuum requires vacuum content");
  }
  return SampleStream(spec);
}

SampleStream sample_photons(const EnsembleSpec& spec) {
  if (spec.content.is_vacuum()) {
    throw config_error("sample_photons requires photon content");
  }
  return SampleStream(spec);
}

namespace {

// per-mode batch means of D; shared by both estimators
struct DensityBatches {
  std::vector<std::vector<double>> means;  // [batch][mode]
  std::vector<std::uint64_t> sizes;
};

DensityBatches accumulate_density(const SampleStream& stream) {
  const EnsembleSpec& spec = stream.spec();
  if (spec.sample_count < 2) {
    throw config_error("estimators need at least 2 samples");
  }
  const size_t n_half = static_cast<size_t>(spec.grid.max_mode()) + 1;
  const auto ranges = partition(spec.sample_count, spec.batch_count);
  DensityBatches out;
  out.means.assign(ranges.size(), std::vector<double>(n_half, 0.0));
  out.sizes.resize(ranges.size());
  for_each_batch(ranges.size(), spec.threads, [&](std::size_t b) {
    std::vector<double>& acc = out.means[b];
    for (std::uint64_t i = ranges[b].begin; i < ranges[b].end; ++i) {
      const SpectralField f = stream.field(i);
      for (size_t k = 0; k < n_half; ++k) {
        acc[k] += std::norm(f.half()[k]);
      }
    }
    const std::uint64_t len = ranges[b].end - ranges[b].begin;
    out.sizes[b] = len;
    if (len > 0) {
      for (double& v : acc) v /= static_cast<double>(len);
    }
  });
  return out;
}

}  // namespace

EnsembleStats estimate_density(const SampleStream& stream) {
  const EnsembleSpec& spec = stream.spec();
  const DensityBatches batches = accumulate_density(stream);
  const size_t n_half = static_cast<size_t>(spec.grid.max_mode()) + 1;

  std::vector<double> mean(n_half, 0.0), err(n_half, 0.0);
  std::vector<double> per_batch(batches.means.size());
  for (size_t k = 0; k < n_half; ++k) {
    for (size_t b = 0; b < batches.means.size(); ++b) {
      per_batch[b] = batches.means[b][k];
    }
    const BatchSummary s =
        summarize(per_batch, batches.sizes, spec.sample_count);
    mean[k] = s.mean;
    err[k] = s.stderr_;
  }
  EnsembleStats stats;
  stats.mean_density = DensityField::from_half(spec.grid, std::move(mean));
  stats.density_stderr = std::move(err);
  stats.n_samples = spec.sample_count;
  stats.batch_count = static_cast<std::uint32_t>(batches.sizes.size());
  return stats;
}

EnsembleStats estimate_autocorrelation(const SampleStream& stream) {
  const EnsembleSpec& spec = stream.spec();
  const GridSpec& grid = spec.grid;
  const DensityBatches batches = accumulate_density(stream);
  const size_t n = static_cast<size_t>(grid.n_modes());

  // The per-sample translation-averaged correlation equals the transform of
  // the per-sample density, and the transform is linear, so batch means of
  // R are transforms of batch-mean densities.
  std::vector<std::vector<double>> r_batches(batches.means.size());
  for (size_t b = 0; b < batches.means.size(); ++b) {
    const RealField rb = autocorrelation(
        DensityField::from_half(grid, batches.means[b]));
    r_batches[b].assign(rb.values().begin(), rb.values().end());
  }

  std::vector<double> mean(n, 0.0), err(n, 0.0);
  std::vector<double> per_batch(r_batches.size());
  for (size_t j = 0; j < n; ++j) {
    for (size_t b = 0; b < r_batches.size(); ++b) {
      per_batch[b] = r_batches[b][j];
    }
    const BatchSummary s =
        summarize(per_batch, batches.sizes, spec.sample_count);
    mean[j] = s.mean;
    err[j] = s.stderr_;
  }
  EnsembleStats stats;
  stats.mean_autocorr = RealField::from_values(grid, std::move(mean));
  stats.autocorr_stderr = std::move(err);
  stats.n_samples = spec.sample_count;
  stats.batch_count = static_cast<std::uint32_t>(batches.sizes.size());
  return stats;
}

nlohmann::json to_json(const EnsembleStats& stats, const EnsembleSpec& spec) {
  nlohmann::json j{{"n_samples", stats.n_samples},
                   {"batch_count", stats.batch_count},
                   {"seed", spec.seed},
                   {"content", spec.content.to_json()},
                   {"grid",
                    {{"n_modes", spec.grid.n_modes()},
                     {"box_length", spec.grid.box_length()},
                     {"mass", spec.grid.mass()},
                     {"include_zero_mode", spec.grid.include_zero_mode()}}}};
  if (stats.mean_density) {
    nlohmann::json rows = nlohmann::json::array();
    const GridSpec& grid = spec.grid;
    for (int k = 0; k <= grid.max_mode(); ++k) {
      rows.push_back({k, stats.mean_density->value(k),
                      stats.density_stderr[static_cast<size_t>(k)]});
    }
    j["mean_density"] = rows;
  }
  if (stats.mean_autocorr) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t l = 0; l < stats.mean_autocorr->values().size(); ++l) {
      rows.push_back({l, stats.mean_autocorr->values()[l],
                      stats.autocorr_stderr[l]});
    }
    j["mean_autocorr"] = rows;
  }
  return j;
}

void dump_samples_csv(std::ostream& os, const SampleStream& stream) {
  os << std::setprecision(17) << "sample_id,k,re,im\n";
  const GridSpec& grid = stream.spec().grid;
  for (std::uint64_t i = 0; i < stream.spec().sample_count; ++i) {
    const SpectralField f = stream.field(i);
    for (int k = -grid.max_mode(); k <= grid.max_mode(); ++k) {
      const complexd z = f.amplitude(k);
      os << i << ',' << k << ',' << z.real() << ',' << z.imag() << '\n';
    }
  }
}

}  // namespace photonlab
