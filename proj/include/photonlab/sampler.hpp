#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "photonlab/content.hpp"
#include "photonlab/field.hpp"

namespace photonlab {

struct EnsembleSpec {
  GridSpec grid;
  PhotonContent content = PhotonContent::vacuum();
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::uint32_t batch_count = 16;
  int threads = 0;  // 0 = hardware concurrency
};

// Deterministic, index-addressable stream of field configurations drawn
// from the squared wavefunctional. The lattice density factorizes over
// momentum pairs, so each pair is drawn independently and exactly: photon
// pairs carry a Gamma(n + 1, 2 omega dp) radial law with uniform phase,
// vacuum pairs a complex Gaussian. Every sample derives its own substream
// from (seed, index), so the stream does not depend on batching or thread
// count.
class SampleStream {
 public:
  explicit SampleStream(EnsembleSpec spec);

  const EnsembleSpec& spec() const { return spec_; }
  SpectralField field(std::uint64_t index) const;

  // |A~(k)|^2 for one sample without building the full field
  double pair_density(std::uint64_t index, int k) const;

 private:
  std::vector<complexd> draw_half(std::uint64_t index) const;

  EnsembleSpec spec_;
  std::vector<int> counts_;  // photons per |k|
};

// Vacuum-content stream (per-mode complex Gaussians).
SampleStream sample_vacuum(const EnsembleSpec& spec);

// Photon-content stream. Counter-propagating pairs are refused: their
// density is dominated by a squared contact term and is not a normalizable
// lattice density.
SampleStream sample_photons(const EnsembleSpec& spec);

struct EnsembleStats {
  std::optional<DensityField> mean_density;
  std::vector<double> density_stderr;  // per mode k = 0..max_mode
  std::optional<RealField> mean_autocorr;
  std::vector<double> autocorr_stderr;  // per lag j = 0..N-1
  std::uint64_t n_samples = 0;
  std::uint32_t batch_count = 0;
};

// Per-mode sample mean and batch-means standard error of D(p_k).
EnsembleStats estimate_density(const SampleStream& stream);

// Translation-averaged autocorrelation estimate R(x_j), equal by the
// lattice Wiener-Khinchin identity to the transform of the sample spectral
// density, with batch-means standard errors per lag. R(0) reproduces the
// mean Parseval energy exactly.
EnsembleStats estimate_autocorrelation(const SampleStream& stream);

nlohmann::json to_json(const EnsembleStats& stats, const EnsembleSpec& spec);

// CSV rows sample_id,k,re,im over the symmetric mode set -max..max.
void dump_samples_csv(std::ostream& os, const SampleStream& stream);

}  // namespace photonlab
