// Python bindings. Signals cross the boundary as 1-D float64 arrays with the
// sampling rate passed alongside.
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "ratenoise/ratenoise.hpp"

namespace py = pybind11;
namespace rn = ratenoise;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

rn::DiscreteSignal to_signal(const Array& x, double rate) {
  if (x.ndim() != 1) throw std::invalid_argument("expected a 1-D array");
  const double* p = x.data();
  return {rn::SampleRate(rate), std::vector<double>(p, p + x.size())};
}

py::array_t<double> to_array(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

py::array_t<double> to_array(const rn::DiscreteSignal& s) {
  return py::array_t<double>(static_cast<py::ssize_t>(s.size()), s.samples().data());
}

rn::Distribution parse_distribution(const std::string& name) {
  if (name == "uniform") return rn::Distribution::Uniform;
  if (name == "triangular3") return rn::Distribution::Triangular3;
  throw std::invalid_argument("distribution must be 'uniform' or 'triangular3', got '" + name + "'");
}

rn::NoiseSpec make_spec(std::optional<double> vsd, std::optional<double> amplitude, std::optional<double> ref_rate) {
  if (vsd && !amplitude && !ref_rate) return rn::NoiseSpec::from_vsd(*vsd);
  if (!vsd && amplitude && ref_rate) return rn::NoiseSpec::from_reference(*amplitude, rn::SampleRate(*ref_rate));
  throw std::invalid_argument("give either vsd or both amplitude and ref_rate");
}

// std::variant casters need a default-constructible first alternative, which
// NoiseSpec deliberately lacks; dispatch on the bound types by hand instead.
rn::NoiseSource to_source(const py::object& o) {
  if (py::isinstance<rn::RateAwareSource>(o)) return o.cast<rn::RateAwareSource>();
  if (py::isinstance<rn::LegacySource>(o)) return o.cast<rn::LegacySource>();
  throw py::type_error("source must be RateAwareSource or LegacySource");
}

template <class T>
bool try_algorithm(const py::object& o, std::optional<rn::AlgorithmSpec>& out) {
  if (!py::isinstance<T>(o)) return false;
  out.emplace(o.cast<T>());
  return true;
}

rn::AlgorithmSpec to_algorithm(const py::object& o) {
  std::optional<rn::AlgorithmSpec> a;
  namespace p = rn::pipeline;
  if (try_algorithm<p::Noise>(o, a) || try_algorithm<p::Lowpass>(o, a) || try_algorithm<p::StateVariable>(o, a) ||
      try_algorithm<p::QuantiseAverage>(o, a) || try_algorithm<p::DeltaSigma>(o, a) || try_algorithm<p::Panpipe>(o, a)) {
    return *a;
  }
  throw py::type_error("expected a pipeline: Noise, Lowpass, StateVariable, QuantiseAverage, DeltaSigma or Panpipe");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sampling-rate-aware white noise";

  py::register_exception<rn::IoError>(m, "IoError", PyExc_OSError);

  py::class_<rn::NoiseSpec>(m, "NoiseSpec")
      .def_static("from_vsd", &rn::NoiseSpec::from_vsd, py::arg("vsd"))
      .def_static(
          "from_reference",
          [](double y, double ref_rate) { return rn::NoiseSpec::from_reference(y, rn::SampleRate(ref_rate)); },
          py::arg("amplitude"), py::arg("ref_rate"))
      .def_property_readonly("vsd", &rn::NoiseSpec::vsd)
      .def(
          "stddev_at", [](const rn::NoiseSpec& s, double rate) { return s.stddev_at(rn::SampleRate(rate)); },
          py::arg("rate"))
      .def("__repr__", [](const rn::NoiseSpec& s) { return "NoiseSpec(vsd=" + std::to_string(s.vsd()) + ")"; });

  // --- generators -----------------------------------------------------------

  m.def(
      "white_noise",
      [](double rate, double duration, std::optional<double> vsd, std::optional<double> amplitude,
         std::optional<double> ref_rate, std::uint64_t seed, const std::string& distribution) {
        return to_array(rn::white_noise(make_spec(vsd, amplitude, ref_rate), rn::SampleRate(rate), duration,
                                        rn::Seed{seed}, parse_distribution(distribution)));
      },
      py::arg("rate"), py::arg("duration"), py::kw_only(), py::arg("vsd") = py::none(),
      py::arg("amplitude") = py::none(), py::arg("ref_rate") = py::none(), py::arg("seed") = 0,
      py::arg("distribution") = "uniform",
      "Rate-aware white noise: stddev vsd*sqrt(rate), or amplitude at ref_rate.");
  m.def(
      "white_noise_legacy",
      [](double rate, double duration, double amplitude, std::uint64_t seed) {
        return to_array(rn::white_noise_legacy(amplitude, rn::SampleRate(rate), duration, rn::Seed{seed}));
      },
      py::arg("rate"), py::arg("duration"), py::kw_only(), py::arg("amplitude"), py::arg("seed") = 0,
      "Uniform noise on [-amplitude, amplitude] at every rate.");
  m.def(
      "sine", [](double rate, double duration, double freq, double amplitude, double phase) {
        return to_array(rn::sine_oscillator(freq, amplitude, rn::SampleRate(rate), duration, phase));
      },
      py::arg("rate"), py::arg("duration"), py::kw_only(), py::arg("freq"), py::arg("amplitude") = 1.0,
      py::arg("phase") = 0.0);
  m.def("split_seed", [](std::uint64_t seed, std::uint64_t index) { return rn::split(rn::Seed{seed}, index).value; },
        py::arg("seed"), py::arg("index"));

  // --- processing -----------------------------------------------------------

  m.def(
      "first_order_lowpass",
      [](const Array& x, double rate, double cutoff) { return to_array(rn::first_order_lowpass(to_signal(x, rate), cutoff)); },
      py::arg("x"), py::arg("rate"), py::arg("cutoff"));
  m.def(
      "state_variable_lowpass",
      [](const Array& x, double rate, double resonance, double q) {
        return to_array(rn::state_variable_lowpass(to_signal(x, rate), resonance, q));
      },
      py::arg("x"), py::arg("rate"), py::arg("resonance"), py::arg("q") = 5.0);
  m.def(
      "moving_average",
      [](const Array& x, double rate, double window) { return to_array(rn::moving_average(to_signal(x, rate), window)); },
      py::arg("x"), py::arg("rate"), py::arg("window"));
  m.def(
      "integrate", [](const Array& x, double rate) { return to_array(rn::integrate(to_signal(x, rate))); },
      py::arg("x"), py::arg("rate"));
  m.def(
      "quantise_hold",
      [](const Array& x, double rate, double period) { return to_array(rn::quantise_hold(to_signal(x, rate), period)); },
      py::arg("x"), py::arg("rate"), py::arg("period"));
  m.def(
      "quantise_average",
      [](const Array& x, double rate, double period) {
        return to_array(rn::quantise_average(to_signal(x, rate), period));
      },
      py::arg("x"), py::arg("rate"), py::arg("period"));
  m.def(
      "upsample_constant",
      [](const Array& x, double rate, std::size_t factor) {
        return to_array(rn::upsample_constant(to_signal(x, rate), factor));
      },
      py::arg("x"), py::arg("rate"), py::arg("factor"));
  m.def(
      "downsample_average",
      [](const Array& x, double rate, std::size_t factor) {
        return to_array(rn::downsample_average(to_signal(x, rate), factor));
      },
      py::arg("x"), py::arg("rate"), py::arg("factor"));
  m.def(
      "delta_sigma",
      [](const Array& x, double rate, double threshold) { return to_array(rn::delta_sigma(to_signal(x, rate), threshold)); },
      py::arg("x"), py::arg("rate"), py::arg("threshold"),
      "Impulses of area `threshold` (height rate*threshold) whenever the integrated input exceeds it.");

  // --- spectra --------------------------------------------------------------

  m.def(
      "dft", [](const Array& x, double rate) { return rn::dft(to_signal(x, rate)).coefficients; }, py::arg("x"),
      py::arg("rate"), "X_k = (1/rate) * sum_j x_j exp(+2 pi i j k / n).");
  m.def(
      "autocovariance",
      [](const Array& x, double rate, std::size_t max_lag) {
        return to_array(rn::autocovariance(to_signal(x, rate), max_lag).values);
      },
      py::arg("x"), py::arg("rate"), py::arg("max_lag"));
  m.def(
      "noise_spectral_density",
      [](const Array& x, double rate, std::optional<std::size_t> max_lag) {
        const auto s = to_signal(x, rate);
        const auto d = max_lag ? rn::noise_spectral_density(s, *max_lag) : rn::noise_spectral_density(s);
        std::vector<double> re(d.coefficients.size());
        for (std::size_t k = 0; k < re.size(); ++k) re[k] = d.coefficients[k].real();
        return py::make_tuple(to_array(re), d.bin_width);
      },
      py::arg("x"), py::arg("rate"), py::arg("max_lag") = py::none(),
      "Returns (density, bin_width); density is real, V^2*s.");

  // --- I/O ------------------------------------------------------------------

  m.def(
      "write_wav",
      [](const std::filesystem::path& path, const Array& x, double rate, double full_scale) {
        rn::write_wav(path, to_signal(x, rate), full_scale);
      },
      py::arg("path"), py::arg("x"), py::arg("rate"), py::arg("full_scale") = 1.0);
  m.def(
      "read_wav",
      [](const std::filesystem::path& path, double full_scale) {
        const auto s = rn::read_wav(path, full_scale);
        return py::make_tuple(to_array(s), s.rate().hz());
      },
      py::arg("path"), py::arg("full_scale") = 1.0, "Returns (samples, rate).");

  // --- pipelines and comparability -------------------------------------------

  py::class_<rn::RateAwareSource>(m, "RateAwareSource")
      .def(py::init([](const rn::NoiseSpec& spec, const std::string& dist) {
             return rn::RateAwareSource{spec, parse_distribution(dist)};
           }),
           py::arg("spec"), py::arg("distribution") = "uniform");
  py::class_<rn::LegacySource>(m, "LegacySource")
      .def(py::init([](double amplitude) { return rn::LegacySource{rn::Volts{amplitude}}; }), py::arg("amplitude"));

  using Source = py::object;
  py::class_<rn::pipeline::Noise>(m, "Noise").def(py::init([](const Source& s) { return rn::pipeline::Noise{to_source(s)}; }),
                                                  py::arg("source"));
  py::class_<rn::pipeline::Lowpass>(m, "Lowpass")
      .def(py::init([](const Source& s, double cutoff) { return rn::pipeline::Lowpass{to_source(s), rn::Hertz{cutoff}}; }),
           py::arg("source"), py::arg("cutoff"));
  py::class_<rn::pipeline::StateVariable>(m, "StateVariable")
      .def(py::init([](const Source& s, double resonance, double q) {
             return rn::pipeline::StateVariable{to_source(s), rn::Hertz{resonance}, q};
           }),
           py::arg("source"), py::arg("resonance"), py::arg("q") = 5.0);
  py::class_<rn::pipeline::QuantiseAverage>(m, "QuantiseAverage")
      .def(py::init([](const Source& s, double period) { return rn::pipeline::QuantiseAverage{to_source(s), rn::Seconds{period}}; }),
           py::arg("source"), py::arg("period"));
  py::class_<rn::pipeline::DeltaSigma>(m, "DeltaSigma")
      .def(py::init([](const Source& s, double dc, double threshold) {
             return rn::pipeline::DeltaSigma{to_source(s), rn::Volts{dc}, rn::VoltSeconds{threshold}};
           }),
           py::arg("source"), py::arg("dc_offset"), py::arg("threshold"));
  py::class_<rn::pipeline::Panpipe>(m, "Panpipe")
      .def(py::init([](double pitch, bool legacy) { return rn::pipeline::Panpipe{rn::Hertz{pitch}, legacy}; }),
           py::arg("pitch") = 440.0, py::arg("legacy") = false);

  m.def("describe", [](const py::object& a) { return rn::describe(to_algorithm(a)); }, py::arg("algorithm"));
  m.def(
      "render",
      [](const py::object& a, double rate, double duration, std::uint64_t seed) {
        return to_array(rn::render(to_algorithm(a), rn::SampleRate(rate), duration, rn::Seed{seed}));
      },
      py::arg("algorithm"), py::arg("rate"), py::arg("duration"), py::arg("seed") = 0);

  py::class_<rn::MetricResult>(m, "MetricResult")
      .def_readonly("name", &rn::MetricResult::name)
      .def_readonly("value_at_r0", &rn::MetricResult::value_at_r0)
      .def_readonly("value_of_projected_r1", &rn::MetricResult::value_of_projected_r1)
      .def_readonly("ratio", &rn::MetricResult::ratio)
      .def_readonly("tolerance", &rn::MetricResult::tolerance)
      .def_readonly("passed", &rn::MetricResult::pass)
      .def("__repr__", [](const rn::MetricResult& r) {
        return "MetricResult(" + r.name + ", ratio=" + std::to_string(r.ratio) + (r.pass ? ", pass)" : ", fail)");
      });
  py::class_<rn::ComparabilityReport>(m, "ComparabilityReport")
      .def_readonly("r0", &rn::ComparabilityReport::r0)
      .def_readonly("r1", &rn::ComparabilityReport::r1)
      .def_readonly("metrics", &rn::ComparabilityReport::metrics)
      .def_property_readonly("passed", &rn::ComparabilityReport::all_pass)
      .def("metric", &rn::ComparabilityReport::metric, py::arg("name"), py::return_value_policy::reference_internal);

  m.def(
      "check_comparability",
      [](const py::object& a, double r0, double r1, std::size_t trials, double tolerance, double duration,
         std::uint64_t seed) {
        return rn::check_comparability(to_algorithm(a), rn::SampleRate(r0), rn::SampleRate(r1), trials, tolerance,
                                       {duration, rn::Seed{seed}});
      },
      py::arg("algorithm"), py::arg("r0") = 11025.0, py::arg("r1") = 44100.0, py::arg("trials") = 100,
      py::arg("tolerance") = 0.1, py::arg("duration") = 0.5, py::arg("seed") = 0);
}
