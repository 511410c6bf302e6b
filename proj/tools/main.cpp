// photonlab command line tool: exact photon wavefunctional prefactors,
// spectral-density maximization, ensemble sampling and the acceptance
// checks, on a 1D periodic lattice in natural units (hbar = c = 1).

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include "photonlab/content.hpp"
#include "photonlab/errors.hpp"
#include "photonlab/multimode.hpp"
#include "photonlab/optimizer.hpp"
#include "photonlab/polynomial.hpp"
#include "photonlab/sampler.hpp"
#include "photonlab/serialize.hpp"
#include "photonlab/transforms.hpp"
#include "photonlab/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kUnitsNote = "natural (hbar = c = 1)";

struct RunConfig {
  int grid_n = 128;
  double box_length = 20.0 * std::numbers::pi;
  double mass = 0.0;
  bool include_zero_mode = false;
  int mode = 0;   // 0 = no photon content
  int count = 1;
  int mode2 = 0;  // 0 = unset
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1234;
  std::uint32_t batches = 16;
  int threads = 0;
  std::string out = ".";
  std::string format = "csv";

  photonlab::GridSpec grid() const {
    return photonlab::GridSpec(grid_n, box_length, mass, include_zero_mode);
  }

  photonlab::PhotonContent content() const {
    if (mode == 0) {
      if (mode2 != 0) {
        throw photonlab::config_error("--mode2 requires --mode");
      }
      return photonlab::PhotonContent::vacuum();
    }
    if (mode2 != 0) {
      if (count != 1) {
        throw photonlab::config_error(
            "--mode2 describes one photon per mode; --count must be 1");
      }
      return photonlab::PhotonContent::pair(mode, mode2);
    }
    return photonlab::PhotonContent::single(mode, count);
  }
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) {
    throw photonlab::config_error("cannot write " + path.string());
  }
  os << text;
}

void write_json_file(const fs::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

template <class Field>
void write_field(const RunConfig& cfg, const std::string& stem,
                 const Field& field) {
  const fs::path dir(cfg.out);
  fs::create_directories(dir);
  if (cfg.format == "json") {
    json j = photonlab::to_json(field);
    j["units"] = kUnitsNote;
    write_json_file(dir / (stem + ".json"), j);
  } else {
    std::ofstream os(dir / (stem + ".csv"));
    os << "# units: " << kUnitsNote << "\n";
    photonlab::write_csv(os, field);
  }
}

// ---- subcommands -------------------------------------------------------

int cmd_polynomials(const RunConfig& cfg, int n_max) {
  using namespace photonlab;
  if (n_max < 0 || n_max > 20) {
    throw config_error("--n-max must be in 0..20 (exact integer range)");
  }

  // closed forms for n <= 4, exact
  const std::vector<std::vector<PolyTerm>> expected = {
      {{1, 0, 0, 0}},
      {{2, 1, 0, 1}},
      {{4, 2, 0, 2}, {-2, 0, 1, 1}},
      {{8, 3, 0, 3}, {-12, 1, 1, 2}},
      {{16, 4, 0, 4}, {-48, 2, 1, 3}, {12, 0, 2, 2}},
  };
  // independent Hermite recursion H_n = 2x H_{n-1} - H_{n-1}'
  std::vector<std::vector<long long>> hermite(static_cast<size_t>(n_max) + 1);
  hermite[0] = {1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<long long> h(static_cast<size_t>(n) + 1, 0);
    const auto& prev = hermite[static_cast<size_t>(n - 1)];
    for (int j = 0; j < n; ++j) {
      h[static_cast<size_t>(j + 1)] += 2 * prev[static_cast<size_t>(j)];
      if (j >= 1) {
        h[static_cast<size_t>(j - 1)] -= j * prev[static_cast<size_t>(j)];
      }
    }
    hermite[static_cast<size_t>(n)] = std::move(h);
  }

  json out_terms = json::array();
  bool all_ok = true;
  for (int n = 0; n <= n_max; ++n) {
    const PhotonPolynomial q = nphoton_polynomial(n);
    std::cout << "Q_" << n << " = " << q.factored_text() << "\n";
    out_terms.push_back(q.to_json());
    if (n <= 4) {
      const PhotonPolynomial ref =
          PhotonPolynomial::from_terms(n, expected[static_cast<size_t>(n)]);
      if (!(q == ref)) {
        all_ok = false;
        std::cout << "  regression MISMATCH: expected " << ref.canonical_text()
                  << ", got " << q.canonical_text() << "\n";
      }
    }
    for (int m = 0; m <= n / 2; ++m) {
      if (q.coefficient(m) !=
          hermite[static_cast<size_t>(n)][static_cast<size_t>(n - 2 * m)]) {
        all_ok = false;
        std::cout << "  Hermite MISMATCH at contact power " << m << "\n";
      }
    }
  }
  std::cout << "regression + Hermite cross-check: "
            << (all_ok ? "PASS" : "FAIL") << "\n";
  const fs::path dir(cfg.out);
  fs::create_directories(dir);
  write_json_file(dir / "polynomials.json",
                  json{{"units", kUnitsNote}, {"polynomials", out_terms}});
  return all_ok ? 0 : 3;
}

int cmd_optimize(const RunConfig& cfg) {
  using namespace photonlab;
  const GridSpec grid = cfg.grid();
  const PhotonContent content = cfg.content();
  const fs::path dir(cfg.out);
  fs::create_directories(dir);

  json report{{"units", kUnitsNote},
              {"grid", to_json(grid)},
              {"content", content.to_json()}};

  if (content.counter_propagating()) {
    const CounterPropagatingReport rep =
        counter_propagating_extremum(grid, content.entries()[0].mode);
    write_field(cfg, "closed_form_density", rep.report.density);
    double worst = 0.0;
    for (int k = 1; k <= grid.max_mode(); ++k) {
      worst = std::max(worst, rep.exponent_gradient[static_cast<size_t>(k)]);
    }
    report["counter_propagating"] = true;
    report["certificate"] = rep.certified ? "PASS" : "FAIL";
    report["max_exponent_gradient"] = worst;
    write_json_file(dir / "optimize_report.json", report);
    std::cout << "counter-propagating pair: D = 0, certificate "
              << (rep.certified ? "PASS" : "FAIL") << "\n";
    return rep.certified ? 0 : 3;
  }

  const MaximizerReport closed = most_likely_density(grid, content);
  const MaximizerReport ascent =
      ascent_maximize(grid, content, flat_density(grid, 1.0));
  const RealField autocorr = most_likely_autocorrelation(grid, content);

  write_field(cfg, "closed_form_density", closed.density);
  write_field(cfg, "ascent_density", ascent.density);
  write_field(cfg, "most_likely_autocorr", autocorr);

  json peaks = json::array();
  double peak_dev = 0.0;
  double off_mass = 0.0;
  {
    std::vector<bool> is_peak(static_cast<size_t>(grid.max_mode()) + 1, false);
    for (const PhotonEntry& e : content.entries()) {
      is_peak[static_cast<size_t>(std::abs(e.mode))] = true;
    }
    for (int k = 1; k <= grid.max_mode(); ++k) {
      if (!is_peak[static_cast<size_t>(k)]) {
        off_mass += 2.0 * ascent.density.value(k) * grid.dp();
      }
    }
    for (const PhotonEntry& e : content.entries()) {
      const double closed_peak = closed.density.value(e.mode);
      const double ascent_peak = ascent.density.value(e.mode);
      peaks.push_back({{"mode", e.mode},
                       {"count", e.count},
                       {"peak_density", closed_peak},
                       {"pair_weight", 2.0 * closed_peak * grid.dp()},
                       {"ascent_peak_density", ascent_peak}});
      if (closed_peak > 0.0) {
        peak_dev = std::max(
            peak_dev, std::abs(ascent_peak - closed_peak) / closed_peak);
      }
      std::cout << "mode " << e.mode << ": closed-form peak " << closed_peak
                << ", ascent peak " << ascent_peak << "\n";
    }
  }
  const std::string ext = cfg.format == "json" ? ".json" : ".csv";
  report["closed_form"] = to_json(closed, content);
  report["closed_form"]["peaks"] = peaks;
  report["closed_form"]["density_csv_ref"] = "closed_form_density" + ext;
  report["ascent"] = to_json(ascent, content);
  report["ascent"]["density_csv_ref"] = "ascent_density" + ext;
  report["agreement"] = {{"peak_rel_dev", peak_dev},
                         {"ascent_off_peak_mass", off_mass}};
  report["autocorr_zero_lag"] = autocorr.value(0);
  write_json_file(dir / "optimize_report.json", report);

  if (!ascent.converged) {
    std::cout << "ascent did NOT converge: residual " << ascent.residual
              << " after " << ascent.iterations << " iterations\n";
    return 3;
  }
  std::cout << "ascent converged in " << ascent.iterations
            << " iterations, peak agreement " << peak_dev << "\n";
  return 0;
}

int cmd_autocorr(const RunConfig& cfg) {
  using namespace photonlab;
  const GridSpec grid = cfg.grid();
  const PhotonContent content = cfg.content();
  const RealField r = most_likely_autocorrelation(grid, content);
  write_field(cfg, "most_likely_autocorr", r);
  double dev = 0.0;
  for (int j = 0; j < grid.n_modes(); ++j) {
    double want = 0.0;
    for (const PhotonEntry& e : content.entries()) {
      const double p = grid.omega(e.mode);
      want += e.count * std::cos(p * grid.position(j)) / p;
    }
    dev = std::max(dev, std::abs(r.value(j) - want));
  }
  std::cout << "R(0) = " << r.value(0)
            << ", max deviation from the cosine form = " << dev << "\n";
  return 0;
}

int cmd_sample(const RunConfig& cfg, bool baseline,
               const std::string& dump_path) {
  using namespace photonlab;
  const GridSpec grid = cfg.grid();
  const PhotonContent content = cfg.content();
  const fs::path dir(cfg.out);
  fs::create_directories(dir);

  EnsembleSpec spec{grid,     content,     cfg.samples,
                    cfg.seed, cfg.batches, cfg.threads};
  const SampleStream stream(spec);
  if (!dump_path.empty()) {
    std::ofstream os(dump_path);
    if (!os) throw config_error("cannot write " + dump_path);
    dump_samples_csv(os, stream);
  }
  const EnsembleStats density_stats = estimate_density(stream);
  const EnsembleStats autocorr_stats = estimate_autocorrelation(stream);

  // photons per |k| for the moment check
  std::vector<int> counts(static_cast<size_t>(grid.max_mode()) + 1, 0);
  for (const PhotonEntry& e : content.entries()) {
    counts[static_cast<size_t>(std::abs(e.mode))] += e.count;
  }
  int ok = 0;
  for (int k = 1; k <= grid.max_mode(); ++k) {
    const double want = (1.0 + counts[static_cast<size_t>(k)]) /
                        (2.0 * grid.omega(k) * grid.dp());
    if (std::abs(density_stats.mean_density->value(k) - want) <=
        3.0 * density_stats.density_stderr[static_cast<size_t>(k)]) {
      ++ok;
    }
  }
  const int need = static_cast<int>(std::ceil(0.95 * grid.max_mode()));
  const bool moments_ok = ok >= need;

  json report = to_json(density_stats, spec);
  report["units"] = kUnitsNote;
  report["mean_autocorr"] = to_json(autocorr_stats, spec)["mean_autocorr"];
  report["moment_check"] = {{"modes_within_3se", ok},
                            {"modes_total", grid.max_mode()},
                            {"required", need},
                            {"pass", moments_ok}};
  json excess_rows = json::array();
  for (const PhotonEntry& e : content.entries()) {
    const int k = std::abs(e.mode);
    const double level = 1.0 / (2.0 * grid.omega(k) * grid.dp());
    excess_rows.push_back(
        {{"mode", e.mode},
         {"count", e.count},
         {"excess", density_stats.mean_density->value(k) - level},
         {"expected_excess", e.count * level},
         {"stderr", density_stats.density_stderr[static_cast<size_t>(k)]}});
  }
  report["photon_excess"] = excess_rows;

  if (baseline) {
    EnsembleSpec vac_spec = spec;
    vac_spec.content = PhotonContent::vacuum();
    const EnsembleStats vac = estimate_density(SampleStream(vac_spec));
    report["vacuum_baseline"] = to_json(vac, vac_spec)["mean_density"];
  }
  write_json_file(dir / "sample_stats.json", report);
  write_field(cfg, "mean_density", *density_stats.mean_density);
  write_field(cfg, "mean_autocorr", *autocorr_stats.mean_autocorr);

  std::cout << "moment check: " << ok << "/" << grid.max_mode()
            << " modes within 3 standard errors -> "
            << (moments_ok ? "PASS" : "FAIL") << "\n";
  return moments_ok ? 0 : 3;
}

int cmd_verify(const RunConfig& cfg, bool list_only, const std::string& fault,
               const std::string& only) {
  using namespace photonlab;
  if (list_only) {
    for (const std::string& id : criterion_ids()) std::cout << id << "\n";
    return 0;
  }
  VerifyOptions opts;
  opts.threads = cfg.threads;
  opts.fault = fault;
  opts.only = only;
  std::cout << "acceptance checks, units " << kUnitsNote << "\n";
  bool all_pass = true;
  json rows = json::array();
  const auto results = run_acceptance(opts, [&](const CriterionResult& r) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " ("
              << r.seconds << " s): " << r.detail << "\n";
  });
  for (const CriterionResult& r : results) {
    all_pass = all_pass && r.pass;
    rows.push_back({{"id", r.id},
                    {"pass", r.pass},
                    {"detail", r.detail},
                    {"seconds", r.seconds}});
  }
  if (cfg.out != ".") {
    fs::create_directories(cfg.out);
  }
  write_json_file(fs::path(cfg.out) / "verify_report.json",
                  json{{"units", kUnitsNote},
                       {"pass", all_pass},
                       {"criteria", rows}});
  std::cout << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "photonlab: free-photon field statistics on a 1D lattice "
      "(natural units, hbar = c = 1)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value config file; flags win");

  RunConfig cfg;
  app.add_option("--grid-n", cfg.grid_n, "lattice sites N (positive even)");
  app.add_option("--box-length", cfg.box_length, "box length L");
  app.add_option("--mass", cfg.mass, "mass regulator m >= 0");
  app.add_flag("--include-zero-mode", cfg.include_zero_mode,
               "retain the k = 0 mode (needs --mass > 0)");
  app.add_option("--mode", cfg.mode, "photon mode index (nonzero)");
  app.add_option("--count", cfg.count, "photons at --mode");
  app.add_option("--mode2", cfg.mode2,
                 "second photon mode (one photon per mode)");
  app.add_option("--samples", cfg.samples, "ensemble sample count");
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--batches", cfg.batches, "batch count for standard errors");
  app.add_option("--threads", cfg.threads, "worker threads (0 = cores)");
  app.add_option("--out", cfg.out, "output directory");
  app.add_option("--format", cfg.format, "field dump format")
      ->check(CLI::IsMember({"csv", "json"}));

  int n_max = 4;
  bool baseline = false;
  std::string dump_path;
  bool verify_list = false;
  std::string fault;
  std::string only;

  CLI::App* polynomials = app.add_subcommand(
      "polynomials", "print the exact n-photon prefactors and cross-checks");
  polynomials->add_option("--n-max", n_max, "largest photon number (<= 20)");
  polynomials->fallthrough();

  CLI::App* optimize = app.add_subcommand(
      "optimize", "most likely spectral density: closed form + ascent oracle");
  optimize->fallthrough();

  CLI::App* autocorr = app.add_subcommand(
      "autocorr", "autocorrelation of the most likely spectral density");
  autocorr->fallthrough();

  CLI::App* sample = app.add_subcommand(
      "sample", "draw field configurations and estimate ensemble statistics");
  sample->add_flag("--baseline", baseline, "also run a vacuum baseline");
  sample->add_option("--dump-samples", dump_path,
                     "write every sample to this CSV path");
  sample->fallthrough();

  CLI::App* verify = app.add_subcommand(
      "verify", "run the acceptance criteria and report PASS/FAIL per item");
  verify->add_flag("--list", verify_list, "list criterion ids without running");
  verify->add_option("--fault", fault,
                     "negative control: tamper the named criterion's "
                     "expectation; it must then FAIL");
  verify->add_option("--only", only, "run a single criterion");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    // an explicit zero is invalid, only omission means vacuum content
    if (app.count("--mode") > 0 && cfg.mode == 0) {
      throw photonlab::config_error("--mode: photon mode index must be nonzero");
    }
    if (app.count("--mode2") > 0 && cfg.mode2 == 0) {
      throw photonlab::config_error("--mode2: photon mode index must be nonzero");
    }
    if (polynomials->parsed()) return cmd_polynomials(cfg, n_max);
    if (optimize->parsed()) return cmd_optimize(cfg);
    if (autocorr->parsed()) return cmd_autocorr(cfg);
    if (sample->parsed()) return cmd_sample(cfg, baseline, dump_path);
    if (verify->parsed()) return cmd_verify(cfg, verify_list, fault, only);
  } catch (const photonlab::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const photonlab::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
