#include "photonlab/serialize.hpp"

#include <iomanip>
#include <ostream>

namespace photonlab {

namespace {

std::ostream& csv_prep(std::ostream& os) {
  os << std::setprecision(17);
  return os;
}

}  // namespace

void write_csv(std::ostream& os, const RealField& field) {
  csv_prep(os) << "index,x,value\n";
  const GridSpec& grid = field.grid();
  for (int j = 0; j < grid.n_modes(); ++j) {
    os << j << ',' << grid.position(j) << ',' << field.value(j) << '\n';
  }
}

void write_csv(std::ostream& os, const SpectralField& spec) {
  csv_prep(os) << "k,p,re,im\n";
  const GridSpec& grid = spec.grid();
  for (int k = -grid.max_mode(); k <= grid.max_mode(); ++k) {
    const complexd z = spec.amplitude(k);
    os << k << ',' << grid.momentum(k) << ',' << z.real() << ',' << z.imag()
       << '\n';
  }
}

void write_csv(std::ostream& os, const DensityField& density) {
  csv_prep(os) << "k,p,value\n";
  const GridSpec& grid = density.grid();
  for (int k = -grid.max_mode(); k <= grid.max_mode(); ++k) {
    os << k << ',' << grid.momentum(k) << ',' << density.value(k) << '\n';
  }
}

nlohmann::json to_json(const GridSpec& grid) {
  return nlohmann::json{{"n_modes", grid.n_modes()},
                        {"box_length", grid.box_length()},
                        {"mass", grid.mass()},
                        {"include_zero_mode", grid.include_zero_mode()}};
}

nlohmann::json to_json(const RealField& field) {
  nlohmann::json data = nlohmann::json::array();
  for (double v : field.values()) data.push_back(v);
  return nlohmann::json{{"grid", to_json(field.grid())}, {"data", data}};
}

nlohmann::json to_json(const SpectralField& spec) {
  nlohmann::json data = nlohmann::json::array();
  const GridSpec& grid = spec.grid();
  for (int k = -grid.max_mode(); k <= grid.max_mode(); ++k) {
    const complexd z = spec.amplitude(k);
    data.push_back({k, z.real(), z.imag()});
  }
  return nlohmann::json{{"grid", to_json(grid)}, {"data", data}};
}

nlohmann::json to_json(const DensityField& density) {
  nlohmann::json data = nlohmann::json::array();
  const GridSpec& grid = density.grid();
  for (int k = -grid.max_mode(); k <= grid.max_mode(); ++k) {
    data.push_back({k, density.value(k)});
  }
  return nlohmann::json{{"grid", to_json(grid)}, {"data", data}};
}

GridSpec grid_from_json(const nlohmann::json& j) {
  return GridSpec(j.at("n_modes").get<int>(), j.at("box_length").get<double>(),
                  j.value("mass", 0.0), j.value("include_zero_mode", false));
}

RealField real_field_from_json(const nlohmann::json& j) {
  GridSpec grid = grid_from_json(j.at("grid"));
  return RealField::from_values(grid, j.at("data").get<std::vector<double>>());
}

SpectralField spectral_field_from_json(const nlohmann::json& j) {
  GridSpec grid = grid_from_json(j.at("grid"));
  std::vector<complexd> half(static_cast<size_t>(grid.max_mode()) + 1);
  for (const auto& row : j.at("data")) {
    const int k = row.at(0).get<int>();
    const complexd z(row.at(1).get<double>(), row.at(2).get<double>());
    if (k >= 0 && grid.retained(k)) half[static_cast<size_t>(k)] = z;
  }
  return SpectralField::from_half(grid, std::move(half));
}

DensityField density_field_from_json(const nlohmann::json& j) {
  GridSpec grid = grid_from_json(j.at("grid"));
  std::vector<double> half(static_cast<size_t>(grid.max_mode()) + 1);
  for (const auto& row : j.at("data")) {
    const int k = row.at(0).get<int>();
    if (k >= 0 && grid.retained(k)) {
      half[static_cast<size_t>(k)] = row.at(1).get<double>();
    }
  }
  return DensityField::from_half(grid, std::move(half));
}

}  // namespace photonlab
