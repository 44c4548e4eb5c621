#include "ratenoise/harness.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ratenoise/filters.hpp"
#include "ratenoise/impulse.hpp"
#include "ratenoise/io.hpp"
#include "ratenoise/quantise.hpp"
#include "ratenoise/spectral.hpp"

namespace ratenoise {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

template <class F>
DiscreteSignal stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("stage '") + name + "': " + e.what());
  }
}

DiscreteSignal render_source(const NoiseSource& source, SampleRate rate, double duration_s, Seed seed) {
  return stage("noise", [&] {
    return std::visit(overloaded{
                          [&](const RateAwareSource& s) { return white_noise(s.spec, rate, duration_s, seed, s.dist); },
                          [&](const LegacySource& s) {
                            return white_noise_legacy(s.amplitude.value, rate, duration_s, seed);
                          },
                      },
                      source);
  });
}

std::string describe_source(const NoiseSource& source) {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const RateAwareSource& s) {
                   out << "noise(vsd=" << s.spec.vsd()
                       << (s.dist == Distribution::Triangular3 ? ", triangular3)" : ")");
                 },
                 [&](const LegacySource& s) { out << "legacy_noise(amplitude=" << s.amplitude.value << ")"; },
             },
             source);
  return out.str();
}

/// Sum of squared impulse response of the SVF low-pass, i.e. its white-noise
/// power gain, at the given rate.
double svf_noise_power_gain(double resonance_hz, double q, SampleRate rate) {
  std::vector<double> impulse(static_cast<std::size_t>(rate.hz()), 0.0);
  impulse[0] = 1.0;
  const auto h = state_variable_lowpass(DiscreteSignal(rate, std::move(impulse)), resonance_hz, q);
  double acc = 0.0;
  for (double x : h.samples()) acc += x * x;
  return acc;
}

double ratio_of(double a, double b) {
  if (a == b) return 1.0;
  return a / b;
}

double impulse_rate(const DiscreteSignal& s, double threshold_vs) {
  double area = 0.0;
  for (double x : s.samples()) area += x;
  area /= s.rate().hz();
  return area / threshold_vs / duration(s);
}

std::size_t integer_ratio(SampleRate r0, SampleRate r1) {
  const double q = r1.hz() / r0.hz();
  const double nearest = std::nearbyint(q);
  if (nearest < 1.0 || std::abs(q - nearest) > 1e-9 * nearest) {
    throw std::invalid_argument("rate ratio " + std::to_string(r1.hz()) + "/" + std::to_string(r0.hz()) +
                                " is not a positive integer");
  }
  return static_cast<std::size_t>(nearest);
}

}  // namespace

std::string describe(const AlgorithmSpec& algorithm) {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const pipeline::Noise& p) { out << describe_source(p.source); },
                 [&](const pipeline::Lowpass& p) {
                   out << describe_source(p.source) << "->lowpass1(" << p.cutoff.value << " Hz)";
                 },
                 [&](const pipeline::StateVariable& p) {
                   out << describe_source(p.source) << "->svf(" << p.resonance.value << " Hz, q=" << p.q << ")";
                 },
                 [&](const pipeline::QuantiseAverage& p) {
                   out << describe_source(p.source) << "->qavg(" << p.period.value << " s)";
                 },
                 [&](const pipeline::DeltaSigma& p) {
                   out << describe_source(p.source) << "+dc(" << p.dc_offset.value << " V)->dsigma("
                       << p.threshold.value << " V*s)";
                 },
                 [&](const pipeline::Panpipe& p) {
                   out << (p.legacy ? "panpipe_legacy(" : "panpipe(") << p.pitch.value << " Hz)";
                 },
             },
             algorithm);
  return out.str();
}

pipeline::StateVariable panpipe_noise_branch(const pipeline::Panpipe& p) {
  const SampleRate reference(kPanpipeReferenceRate);
  const double gain = svf_noise_power_gain(p.pitch.value, kPanpipeQ, reference);
  // Input stddev at the reference rate that gives the branch its target RMS.
  const double y = kPanpipeBranchRms / std::sqrt(gain);
  NoiseSource source = p.legacy ? NoiseSource{LegacySource{Volts{std::sqrt(3.0) * y}}}
                                : NoiseSource{RateAwareSource{NoiseSpec::from_reference(y, reference)}};
  return {source, p.pitch, kPanpipeQ};
}

DiscreteSignal render(const AlgorithmSpec& algorithm, SampleRate rate, double duration_s, Seed seed) {
  return std::visit(
      overloaded{
          [&](const pipeline::Noise& p) { return render_source(p.source, rate, duration_s, seed); },
          [&](const pipeline::Lowpass& p) {
            const auto x = render_source(p.source, rate, duration_s, seed);
            return stage("lowpass1", [&] { return first_order_lowpass(x, p.cutoff.value); });
          },
          [&](const pipeline::StateVariable& p) {
            const auto x = render_source(p.source, rate, duration_s, seed);
            return stage("svf", [&] { return state_variable_lowpass(x, p.resonance.value, p.q); });
          },
          [&](const pipeline::QuantiseAverage& p) {
            const auto x = render_source(p.source, rate, duration_s, seed);
            return stage("qavg", [&] { return quantise_average(x, p.period.value); });
          },
          [&](const pipeline::DeltaSigma& p) {
            auto x = std::move(render_source(p.source, rate, duration_s, seed)).release();
            for (auto& v : x) v += p.dc_offset.value;
            const DiscreteSignal biased(rate, std::move(x));
            return stage("dsigma", [&] { return delta_sigma(biased, p.threshold.value); });
          },
          [&](const pipeline::Panpipe& p) {
            const auto filtered = render(AlgorithmSpec{panpipe_noise_branch(p)}, rate, duration_s, seed);
            const auto tone = stage("sine", [&] {
              return sine_oscillator(p.pitch.value, kPanpipeBranchRms * std::numbers::sqrt2, rate, duration_s);
            });
            std::vector<double> mix(filtered.size());
            for (std::size_t k = 0; k < mix.size(); ++k) mix[k] = filtered[k] + tone[k];
            return DiscreteSignal(rate, std::move(mix));
          },
      },
      algorithm);
}

double transient_seconds(const AlgorithmSpec& algorithm) {
  return std::visit(overloaded{
                        [](const pipeline::Lowpass& p) { return 5.0 / (2.0 * std::numbers::pi * p.cutoff.value); },
                        [](const pipeline::StateVariable& p) {
                          return 5.0 * p.q / (2.0 * std::numbers::pi * p.resonance.value);
                        },
                        [](const pipeline::Panpipe& p) {
                          return 5.0 * kPanpipeQ / (2.0 * std::numbers::pi * p.pitch.value);
                        },
                        [](const auto&) { return 0.0; },
                    },
                    algorithm);
}

bool ComparabilityReport::all_pass() const {
  for (const auto& m : metrics) {
    if (!m.pass) return false;
  }
  return true;
}

const MetricResult& ComparabilityReport::metric(const std::string& name) const {
  for (const auto& m : metrics) {
    if (m.name == name) return m;
  }
  throw std::out_of_range("no metric named " + name);
}

ComparabilityReport check_comparability(const AlgorithmSpec& algorithm, SampleRate r0, SampleRate r1,
                                        std::size_t trials, double tolerance, const CompareOptions& options) {
  const std::size_t factor = integer_ratio(r0, r1);
  if (trials < 10) throw std::invalid_argument("comparability needs at least 10 trials");
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");

  const auto* delta = std::get_if<pipeline::DeltaSigma>(&algorithm);
  const auto* panpipe = std::get_if<pipeline::Panpipe>(&algorithm);
  const std::size_t skip0 = static_cast<std::size_t>(std::ceil(transient_seconds(algorithm) * r0.hz()));

  struct Sums {
    double low = 0.0;
    double projected = 0.0;
  };
  Sums rms_sum, nsd_sum, rate_sum, branch_sum;

  // Trials run in index order, so the reduction is deterministic.
  for (std::size_t i = 0; i < trials; ++i) {
    const Seed seed = split(options.master, i);
    const auto low = drop_prefix(render(algorithm, r0, options.duration_s, seed), skip0);
    const auto high = drop_prefix(render(algorithm, r1, options.duration_s, seed), skip0 * factor);
    const auto projected = downsample_average(high, factor);
    if (low.size() < 20 || projected.size() < 20) {
      throw std::invalid_argument("render too short to compare after discarding the transient");
    }

    rms_sum.low += rms(low);
    rms_sum.projected += rms(projected);

    const std::size_t max_lag = std::min(low.size(), projected.size()) / 10;
    const double nyquist0 = r0.hz() / 2.0;
    nsd_sum.low += mean_density(noise_spectral_density(low, max_lag), 0.0, nyquist0);
    nsd_sum.projected += mean_density(noise_spectral_density(projected, max_lag), 0.0, nyquist0);

    if (delta != nullptr) {
      rate_sum.low += impulse_rate(low, delta->threshold.value);
      rate_sum.projected += impulse_rate(projected, delta->threshold.value);
    }
    if (panpipe != nullptr) {
      const AlgorithmSpec branch = panpipe_noise_branch(*panpipe);
      branch_sum.low += rms(drop_prefix(render(branch, r0, options.duration_s, seed), skip0));
      branch_sum.projected +=
          rms(downsample_average(drop_prefix(render(branch, r1, options.duration_s, seed), skip0 * factor), factor));
    }
  }

  ComparabilityReport report{r0.hz(), r1.hz(), {}};
  const double t = static_cast<double>(trials);
  auto add = [&](const char* name, const Sums& s) {
    const double a = s.low / t;
    const double b = s.projected / t;
    const double ratio = ratio_of(a, b);
    report.metrics.push_back({name, a, b, ratio, tolerance, std::abs(ratio - 1.0) <= tolerance});
  };
  add("rms", rms_sum);
  add("nsd_in_band", nsd_sum);
  if (delta != nullptr) add("impulse_rate", rate_sum);
  if (panpipe != nullptr) add("noise_branch_rms", branch_sum);
  return report;
}

std::vector<std::pair<SampleRate, SampleRate>> default_rate_pairs() {
  return {{SampleRate(11025), SampleRate(44100)},
          {SampleRate(11025), SampleRate(22050)},
          {SampleRate(22050), SampleRate(44100)}};
}

std::vector<std::filesystem::path> reproduce_noise_figure(const std::filesystem::path& out_dir,
                                                          const NoiseFigureOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

  const SampleRate low_rate(11025);
  const SampleRate high_rate(44100);
  auto make_noise = [&](SampleRate rate) {
    if (options.rate_aware) {
      return white_noise(NoiseSpec::from_reference(1.0, low_rate), rate, options.duration_s, options.seed);
    }
    return white_noise_legacy(1.0, rate, options.duration_s, options.seed);
  };

  const auto low = make_noise(low_rate);
  const std::vector<std::pair<std::string, DiscreteSignal>> columns = {
      {"low", low},
      {"upsampled", upsample_constant(low, 4)},
      {"high", make_noise(high_rate)},
  };

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, auto&& write) {
    const auto path = out_dir / (name + ".csv");
    write(path);
    written.push_back(path);
  };
  for (const auto& [column, x] : columns) {
    emit(column + "_raw", [&](const auto& p) { write_csv(p, x); });
    emit(column + "_lowpass", [&](const auto& p) { write_csv(p, first_order_lowpass(x, 500.0)); });
    emit(column + "_svf", [&](const auto& p) { write_csv(p, state_variable_lowpass(x, 500.0, 5.0)); });
    emit(column + "_spectrum", [&](const auto& p) {
      const auto spectrum = magnitude_spectrum(x);
      std::vector<double> freqs(spectrum.magnitudes.size());
      for (std::size_t k = 0; k < freqs.size(); ++k) freqs[k] = spectrum.frequency(k);
      write_csv(p, freqs, spectrum.magnitudes);
    });
  }
  return written;
}

}  // namespace ratenoise
