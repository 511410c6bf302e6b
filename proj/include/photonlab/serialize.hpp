#pragma once

#include <iosfwd>

#include <json.hpp>

#include "photonlab/field.hpp"

namespace photonlab {

// CSV columns:
//   RealField      index,x,value
//   SpectralField  k,p,re,im        (retained modes, k = -max..max)
//   DensityField   k,p,value
// Values are written with 17 significant digits; 1e-12 relative agreement
// is guaranteed on round trips, bit exactness across platforms is not.
void write_csv(std::ostream& os, const RealField& field);
void write_csv(std::ostream& os, const SpectralField& spec);
void write_csv(std::ostream& os, const DensityField& density);

// JSON document: {"grid": {"n_modes", "box_length", ...}, "data": [...]}.
nlohmann::json to_json(const GridSpec& grid);
nlohmann::json to_json(const RealField& field);
nlohmann::json to_json(const SpectralField& spec);
nlohmann::json to_json(const DensityField& density);

GridSpec grid_from_json(const nlohmann::json& j);
RealField real_field_from_json(const nlohmann::json& j);
SpectralField spectral_field_from_json(const nlohmann::json& j);
DensityField density_field_from_json(const nlohmann::json& j);

}  // namespace photonlab
