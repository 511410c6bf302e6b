#include "photonlab/content.hpp"

#include <sstream>

namespace photonlab {

PhotonContent PhotonContent::vacuum() { return PhotonContent({}); }

PhotonContent PhotonContent::single(int mode, int count) {
  if (count < 0) throw config_error("photon count must be >= 0");
  if (count == 0) return vacuum();
  if (mode == 0) throw config_error("photon mode index must be nonzero");
  return PhotonContent({PhotonEntry{mode, count}});
}

PhotonContent PhotonContent::pair(int mode1, int mode2) {
  if (mode1 == 0 || mode2 == 0) {
    throw config_error("photon mode index must be nonzero");
  }
  if (mode1 == mode2) return single(mode1, 2);
  return PhotonContent({PhotonEntry{mode1, 1}, PhotonEntry{mode2, 1}});
}

int PhotonContent::total_photons() const {
  int n = 0;
  for (const PhotonEntry& e : entries_) n += e.count;
  return n;
}

bool PhotonContent::counter_propagating() const {
  return entries_.size() == 2 && entries_[0].mode == -entries_[1].mode;
}

void PhotonContent::validate_on(const GridSpec& grid) const {
  for (const PhotonEntry& e : entries_) grid.require_photon_mode(e.mode);
}

std::string PhotonContent::describe() const {
  if (is_vacuum()) return "vacuum";
  std::ostringstream os;
  bool first = true;
  for (const PhotonEntry& e : entries_) {
    if (!first) os << " + ";
    first = false;
    os << e.count << " photon" << (e.count == 1 ? "" : "s") << " at mode "
       << e.mode;
  }
  return os.str();
}

nlohmann::json PhotonContent::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const PhotonEntry& e : entries_) {
    entries.push_back({{"mode", e.mode}, {"count", e.count}});
  }
  return nlohmann::json{{"entries", entries},
                        {"total_photons", total_photons()}};
}

}  // namespace photonlab
