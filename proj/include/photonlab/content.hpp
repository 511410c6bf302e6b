#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "photonlab/grid.hpp"

namespace photonlab {

struct PhotonEntry {
  int mode;   // signed mode index, nonzero
  int count;  // photons at that mode, >= 1

  bool operator==(const PhotonEntry&) const = default;
};

// Photon occupation of the lattice. Supported shapes: vacuum, a single mode
// with any count, and two distinct modes with one photon each. A pair on
// the same mode collapses to a single two-photon entry; the
// counter-propagating pair (k, -k) is representable but most operations
// route it to the dedicated extremum analysis.
class PhotonContent {
 public:
  static PhotonContent vacuum();
  static PhotonContent single(int mode, int count);
  static PhotonContent pair(int mode1, int mode2);

  const std::vector<PhotonEntry>& entries() const { return entries_; }
  int total_photons() const;
  bool is_vacuum() const { return entries_.empty(); }
  bool counter_propagating() const;

  void validate_on(const GridSpec& grid) const;

  std::string describe() const;
  nlohmann::json to_json() const;

  bool operator==(const PhotonContent&) const = default;

 private:
  explicit PhotonContent(std::vector<PhotonEntry> entries)
      : entries_(std::move(entries)) {}

  std::vector<PhotonEntry> entries_;
};

}  // namespace photonlab
