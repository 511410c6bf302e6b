#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "photonlab/content.hpp"
#include "photonlab/mode_check.hpp"
#include "photonlab/multimode.hpp"
#include "photonlab/optimizer.hpp"
#include "photonlab/polynomial.hpp"
#include "photonlab/sampler.hpp"
#include "photonlab/serialize.hpp"
#include "photonlab/stats.hpp"
#include "photonlab/transforms.hpp"
#include "photonlab/vacuum.hpp"
#include "photonlab/verify.hpp"

namespace py = pybind11;
using namespace photonlab;

namespace {

py::array_t<double> to_array(std::span<const double> values) {
  return py::array_t<double>(static_cast<py::ssize_t>(values.size()),
                             values.data());
}

py::array_t<std::complex<double>> to_array(std::span<const complexd> values) {
  return py::array_t<std::complex<double>>(
      static_cast<py::ssize_t>(values.size()), values.data());
}

}  // namespace

PYBIND11_MODULE(photonlab, m) {
  m.doc() =
      "Free-photon field statistics on a 1D lattice: exact wavefunctional "
      "prefactors, spectral-density maximization and ensemble sampling "
      "(natural units, hbar = c = 1)";

  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<numeric_error>(m, "NumericError",
                                        PyExc_RuntimeError);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<int, double, double, bool>(), py::arg("n_modes"),
           py::arg("box_length"), py::arg("mass") = 0.0,
           py::arg("include_zero_mode") = false)
      .def_property_readonly("n_modes", &GridSpec::n_modes)
      .def_property_readonly("box_length", &GridSpec::box_length)
      .def_property_readonly("mass", &GridSpec::mass)
      .def_property_readonly("include_zero_mode", &GridSpec::include_zero_mode)
      .def_property_readonly("dx", &GridSpec::dx)
      .def_property_readonly("dp", &GridSpec::dp)
      .def_property_readonly("max_mode", &GridSpec::max_mode)
      .def("position", &GridSpec::position, py::arg("j"))
      .def("momentum", &GridSpec::momentum, py::arg("k"))
      .def("omega", &GridSpec::omega, py::arg("k"))
      .def("retained", &GridSpec::retained, py::arg("k"))
      .def("__eq__", [](const GridSpec& a, const GridSpec& b) { return a == b; });

  py::class_<RealField>(m, "RealField")
      .def_static("zero", &RealField::zero, py::arg("grid"))
      .def_static(
          "from_values",
          [](const GridSpec& grid, const std::vector<double>& values) {
            return RealField::from_values(grid, values);
          },
          py::arg("grid"), py::arg("values"))
      .def_property_readonly("grid", &RealField::grid)
      .def_property_readonly(
          "values", [](const RealField& f) { return to_array(f.values()); })
      .def("value", &RealField::value, py::arg("j"));

  py::class_<SpectralField>(m, "SpectralField")
      .def_static("zero", &SpectralField::zero, py::arg("grid"))
      .def_static(
          "from_half",
          [](const GridSpec& grid, const std::vector<complexd>& half) {
            return SpectralField::from_half(grid, half);
          },
          py::arg("grid"), py::arg("half"))
      .def_static("from_pairs", &SpectralField::from_pairs, py::arg("grid"),
                  py::arg("pairs"))
      .def_property_readonly("grid", &SpectralField::grid)
      .def_property_readonly(
          "half", [](const SpectralField& f) { return to_array(f.half()); })
      .def("amplitude", &SpectralField::amplitude, py::arg("k"));

  py::class_<DensityField>(m, "DensityField")
      .def_static("zero", &DensityField::zero, py::arg("grid"))
      .def_static(
          "from_half",
          [](const GridSpec& grid, const std::vector<double>& half) {
            return DensityField::from_half(grid, half);
          },
          py::arg("grid"), py::arg("half"))
      .def_property_readonly("grid", &DensityField::grid)
      .def_property_readonly(
          "half", [](const DensityField& f) { return to_array(f.half()); })
      .def("value", &DensityField::value, py::arg("k"));

  m.def("forward_transform", &forward_transform, py::arg("field"));
  m.def("inverse_transform", &inverse_transform, py::arg("spec"));
  m.def("parseval_energy", &parseval_energy, py::arg("field"));
  m.def("spectral_energy", &spectral_energy, py::arg("spec"));
  m.def("spectral_density", &spectral_density, py::arg("spec"));
  m.def("autocorrelation", &autocorrelation, py::arg("density"));

  py::class_<PolyTerm>(m, "PolyTerm")
      .def_readonly("coeff", &PolyTerm::coeff)
      .def_readonly("pow_a", &PolyTerm::pow_a)
      .def_readonly("pow_d", &PolyTerm::pow_d)
      .def_readonly("pow_pbar", &PolyTerm::pow_pbar)
      .def("__repr__", [](const PolyTerm& t) {
        return "PolyTerm(coeff=" + std::to_string(t.coeff) +
               ", pow_a=" + std::to_string(t.pow_a) +
               ", pow_d=" + std::to_string(t.pow_d) +
               ", pow_pbar=" + std::to_string(t.pow_pbar) + ")";
      });

  py::class_<PhotonPolynomial>(m, "PhotonPolynomial")
      .def_static("unit", &PhotonPolynomial::unit)
      .def_property_readonly("photon_count", &PhotonPolynomial::photon_count)
      .def_property_readonly("terms", &PhotonPolynomial::terms)
      .def_property_readonly("contact_free", &PhotonPolynomial::contact_free)
      .def("coefficient", &PhotonPolynomial::coefficient, py::arg("pow_d"))
      .def("canonical_text", &PhotonPolynomial::canonical_text)
      .def("factored_text", &PhotonPolynomial::factored_text)
      .def("to_json",
           [](const PhotonPolynomial& p) { return p.to_json().dump(); })
      .def("__eq__", [](const PhotonPolynomial& a, const PhotonPolynomial& b) {
        return a == b;
      })
      .def("__repr__", [](const PhotonPolynomial& p) {
        return "PhotonPolynomial(" + p.canonical_text() + ")";
      });

  m.def("apply_creation", &apply_creation, py::arg("poly"));
  m.def("nphoton_polynomial", &nphoton_polynomial, py::arg("n"));
  m.def("drop_contact_terms", &drop_contact_terms, py::arg("poly"));
  m.def("evaluate_prefactor", &evaluate_prefactor, py::arg("poly"),
        py::arg("a"), py::arg("pbar_abs"));

  py::class_<MultiModeTerm>(m, "MultiModeTerm")
      .def_readonly("coeff", &MultiModeTerm::coeff)
      .def_readonly("pow_p1", &MultiModeTerm::pow_p1)
      .def_readonly("pow_p2", &MultiModeTerm::pow_p2)
      .def_readonly("pow_d1", &MultiModeTerm::pow_d1)
      .def_readonly("pow_d2", &MultiModeTerm::pow_d2)
      .def_readonly("pow_delta", &MultiModeTerm::pow_delta)
      .def_readonly("cross", &MultiModeTerm::cross);

  py::class_<MultiModeExpression>(m, "MultiModeExpression")
      .def_property_readonly("mode1", &MultiModeExpression::mode1)
      .def_property_readonly("mode2", &MultiModeExpression::mode2)
      .def_property_readonly("terms", &MultiModeExpression::terms)
      .def_property_readonly("counter_propagating",
                             &MultiModeExpression::counter_propagating)
      .def("active_terms", &MultiModeExpression::active_terms)
      .def("dominant_counter_term",
           &MultiModeExpression::dominant_counter_term)
      .def("text", &MultiModeExpression::text);

  m.def("two_photon_expression", &two_photon_expression, py::arg("grid"),
        py::arg("k1"), py::arg("k2"));

  py::class_<VacuumGaussian>(m, "VacuumGaussian")
      .def(py::init<const GridSpec&>(), py::arg("grid"))
      .def("omega", &VacuumGaussian::omega, py::arg("k"))
      .def("log_weight", &VacuumGaussian::log_weight, py::arg("field"));

  m.def("evaluate_log_density", &evaluate_log_density, py::arg("poly"),
        py::arg("field"), py::arg("kbar"), py::arg("vac"));

  py::class_<ModeCheckOptions>(m, "ModeCheckOptions")
      .def(py::init<>())
      .def_readwrite("measure", &ModeCheckOptions::measure)
      .def_readwrite("step", &ModeCheckOptions::step)
      .def_readwrite("r_lo", &ModeCheckOptions::r_lo)
      .def_readwrite("r_hi", &ModeCheckOptions::r_hi);

  m.def(
      "mode_eigenvalue_check",
      [](int n, double omega, const ModeCheckOptions& opts) {
        return mode_eigenvalue_check(n, omega, opts);
      },
      py::arg("n"), py::arg("omega"),
      py::arg("opts") = ModeCheckOptions{});

  py::class_<PhotonEntry>(m, "PhotonEntry")
      .def_readonly("mode", &PhotonEntry::mode)
      .def_readonly("count", &PhotonEntry::count);

  py::class_<PhotonContent>(m, "PhotonContent")
      .def_static("vacuum", &PhotonContent::vacuum)
      .def_static("single", &PhotonContent::single, py::arg("mode"),
                  py::arg("count") = 1)
      .def_static("pair", &PhotonContent::pair, py::arg("mode1"),
                  py::arg("mode2"))
      .def_property_readonly("entries", &PhotonContent::entries)
      .def_property_readonly("total_photons", &PhotonContent::total_photons)
      .def_property_readonly("is_vacuum", &PhotonContent::is_vacuum)
      .def_property_readonly("counter_propagating",
                             &PhotonContent::counter_propagating)
      .def("__repr__", [](const PhotonContent& c) {
        return "PhotonContent(" + c.describe() + ")";
      });

  py::class_<MaximizerReport>(m, "MaximizerReport")
      .def_readonly("density", &MaximizerReport::density)
      .def_readonly("log_prob", &MaximizerReport::log_prob)
      .def_readonly("method", &MaximizerReport::method)
      .def_readonly("iterations", &MaximizerReport::iterations)
      .def_readonly("residual", &MaximizerReport::residual)
      .def_readonly("converged", &MaximizerReport::converged);

  py::class_<AscentOptions>(m, "AscentOptions")
      .def(py::init<>())
      .def_readwrite("step", &AscentOptions::step)
      .def_readwrite("tol", &AscentOptions::tol)
      .def_readwrite("max_iter", &AscentOptions::max_iter);

  py::class_<CounterPropagatingReport>(m, "CounterPropagatingReport")
      .def_readonly("report", &CounterPropagatingReport::report)
      .def_readonly("exponent_gradient",
                    &CounterPropagatingReport::exponent_gradient)
      .def_readonly("certified", &CounterPropagatingReport::certified);

  m.def("log_probability", &log_probability, py::arg("density"),
        py::arg("content"));
  m.def("most_likely_density", &most_likely_density, py::arg("grid"),
        py::arg("content"));
  m.def("flat_density", &flat_density, py::arg("grid"), py::arg("value"));
  m.def(
      "ascent_maximize",
      [](const GridSpec& grid, const PhotonContent& content,
         const DensityField& init, const AscentOptions& opts) {
        return ascent_maximize(grid, content, init, opts);
      },
      py::arg("grid"), py::arg("content"), py::arg("init"),
      py::arg("opts") = AscentOptions{});
  m.def("counter_propagating_extremum", &counter_propagating_extremum,
        py::arg("grid"), py::arg("kbar"));
  m.def("most_likely_autocorrelation", &most_likely_autocorrelation,
        py::arg("grid"), py::arg("content"));

  py::class_<EnsembleSpec>(m, "EnsembleSpec")
      .def(py::init([](const GridSpec& grid, const PhotonContent& content,
                       std::uint64_t sample_count, std::uint64_t seed,
                       std::uint32_t batch_count, int threads) {
             return EnsembleSpec{grid,        content, sample_count,
                                 seed,        batch_count, threads};
           }),
           py::arg("grid"), py::arg("content"), py::arg("sample_count"),
           py::arg("seed"), py::arg("batch_count") = 16,
           py::arg("threads") = 0)
      .def_readonly("grid", &EnsembleSpec::grid)
      .def_readonly("content", &EnsembleSpec::content)
      .def_readonly("sample_count", &EnsembleSpec::sample_count)
      .def_readonly("seed", &EnsembleSpec::seed)
      .def_readonly("batch_count", &EnsembleSpec::batch_count);

  py::class_<SampleStream>(m, "SampleStream")
      .def(py::init<EnsembleSpec>(), py::arg("spec"))
      .def_property_readonly("spec", &SampleStream::spec)
      .def("field", &SampleStream::field, py::arg("index"))
      .def("pair_density", &SampleStream::pair_density, py::arg("index"),
           py::arg("k"));

  m.def("sample_vacuum", &sample_vacuum, py::arg("spec"));
  m.def("sample_photons", &sample_photons, py::arg("spec"));

  py::class_<EnsembleStats>(m, "EnsembleStats")
      .def_property_readonly(
          "mean_density",
          [](const EnsembleStats& s) {
            return s.mean_density ? py::cast(*s.mean_density) : py::none();
          })
      .def_property_readonly(
          "density_stderr",
          [](const EnsembleStats& s) {
            return to_array(std::span<const double>(s.density_stderr));
          })
      .def_property_readonly(
          "mean_autocorr",
          [](const EnsembleStats& s) {
            return s.mean_autocorr ? py::cast(*s.mean_autocorr) : py::none();
          })
      .def_property_readonly(
          "autocorr_stderr",
          [](const EnsembleStats& s) {
            return to_array(std::span<const double>(s.autocorr_stderr));
          })
      .def_readonly("n_samples", &EnsembleStats::n_samples)
      .def_readonly("batch_count", &EnsembleStats::batch_count);

  m.def("estimate_density", &estimate_density, py::arg("stream"),
        py::call_guard<py::gil_scoped_release>());
  m.def("estimate_autocorrelation", &estimate_autocorrelation,
        py::arg("stream"), py::call_guard<py::gil_scoped_release>());

  m.def("gamma_cdf", &gamma_cdf, py::arg("shape"), py::arg("rate"),
        py::arg("x"));
  m.def("ks_statistic", &ks_statistic, py::arg("samples"), py::arg("cdf"));
  m.def("ks_critical", &ks_critical, py::arg("alpha"), py::arg("m"));

  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("pass_", &CriterionResult::pass)
      .def_readonly("detail", &CriterionResult::detail)
      .def_readonly("seconds", &CriterionResult::seconds);

  m.def("criterion_ids", [] { return criterion_ids(); });
  m.def(
      "run_acceptance",
      [](std::uint64_t seed, int threads, const std::string& fault,
         const std::string& only) {
        VerifyOptions opts;
        opts.seed = seed;
        opts.threads = threads;
        opts.fault = fault;
        opts.only = only;
        return run_acceptance(opts);
      },
      py::arg("seed") = VerifyOptions{}.seed, py::arg("threads") = 0,
      py::arg("fault") = std::string(), py::arg("only") = std::string(),
      py::call_guard<py::gil_scoped_release>());
}
