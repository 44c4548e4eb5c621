// ratenoise: render rate-aware noise pipelines, check cross-rate
// comparability, and reproduce the noise/filter table.
//
// Exit status: 0 success or all metrics pass, 1 comparability failure,
// 2 usage error, 3 I/O error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratenoise/ratenoise.hpp"

namespace rn = ratenoise;
namespace fs = std::filesystem;

namespace {

enum ExitCode : int { kOk = 0, kCompareFailed = 1, kUsage = 2, kIo = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputFlags {
  std::string path;
  std::string format;
  double full_scale = 1.0;
};

void add_output_flags(CLI::App* cmd, OutputFlags& out, bool required = true) {
  auto* o = cmd->add_option("-o,--output", out.path, "Output file (.wav or .csv)");
  if (required) o->required();
  cmd->add_option("--format", out.format, "Output format, inferred from the extension when omitted")
      ->check(CLI::IsMember({"wav", "csv"}));
  cmd->add_option("--full-scale", out.full_scale, "Volts mapped to PCM full scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::size_t write_output(const OutputFlags& out, const rn::DiscreteSignal& s) {
  std::string format = out.format;
  if (format.empty()) format = fs::path(out.path).extension() == ".csv" ? "csv" : "wav";
  std::size_t clipped = 0;
  if (format == "csv") {
    rn::write_csv(out.path, s);
  } else {
    for (double v : s.samples()) {
      const double scaled = std::nearbyint(v / out.full_scale * 32767.0);
      if (scaled > 32767.0 || scaled < -32768.0) ++clipped;
    }
    rn::write_wav(out.path, s, out.full_scale);
  }
  return clipped;
}

std::vector<std::string> split_fields(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ':')) parts.push_back(part);
  return parts;
}

double parse_number(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(context + ": '" + text + "' is not a number");
  }
}

void print_stat(const char* name, double value) { std::printf("%s=%.9g\n", name, value); }

// --- noise source flags shared by gen-noise and compare ----------------------

struct NoiseFlags {
  std::optional<double> vsd;
  std::optional<double> amplitude;
  std::optional<double> ref_rate;
  bool legacy = false;
  std::string distribution = "uniform";
};

void add_noise_flags(CLI::App* cmd, NoiseFlags& f) {
  cmd->add_option("--vsd", f.vsd, "Voltage spectral density value, V*sqrt(s)");
  cmd->add_option("--amplitude", f.amplitude, "Noise stddev in volts at --ref-rate (or uniform amplitude with --legacy)");
  cmd->add_option("--ref-rate", f.ref_rate, "Reference rate in Hz at which the stddev equals --amplitude");
  cmd->add_flag("--legacy", f.legacy, "Fixed-amplitude uniform noise that ignores the sampling rate");
  cmd->add_option("--distribution", f.distribution, "Sample distribution")
      ->check(CLI::IsMember({"uniform", "triangular3"}))
      ->capture_default_str();
}

rn::Distribution parse_distribution(const std::string& name) {
  return name == "triangular3" ? rn::Distribution::Triangular3 : rn::Distribution::Uniform;
}

rn::NoiseSource resolve_source(const NoiseFlags& f) {
  if (f.legacy) {
    if (!f.amplitude || f.vsd || f.ref_rate) throw UsageError("--legacy takes --amplitude only");
    return rn::LegacySource{rn::Volts{*f.amplitude}};
  }
  const bool pair = f.amplitude.has_value() || f.ref_rate.has_value();
  if (f.vsd.has_value() == pair) throw UsageError("give exactly one of --vsd or --amplitude with --ref-rate");
  if (pair && !(f.amplitude && f.ref_rate)) throw UsageError("--amplitude and --ref-rate must be given together");
  const auto spec = f.vsd ? rn::NoiseSpec::from_vsd(*f.vsd)
                          : rn::NoiseSpec::from_reference(*f.amplitude, rn::SampleRate(*f.ref_rate));
  return rn::RateAwareSource{spec, parse_distribution(f.distribution)};
}

// --- process stages ----------------------------------------------------------

rn::DiscreteSignal apply_stage(const std::string& text, const rn::DiscreteSignal& x) {
  const auto parts = split_fields(text);
  if (parts.empty()) throw UsageError("empty stage");
  const std::string& name = parts[0];
  auto param = [&](std::size_t i) {
    if (i >= parts.size()) throw UsageError("stage '" + text + "': missing parameter " + std::to_string(i));
    return parse_number(parts[i], "stage '" + text + "'");
  };
  auto expect_params = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi) {
      throw UsageError("stage '" + text + "': wrong number of parameters");
    }
  };
  try {
    if (name == "lowpass1") {
      expect_params(1, 1);
      return rn::first_order_lowpass(x, param(1));
    }
    if (name == "svf") {
      expect_params(1, 2);
      return rn::state_variable_lowpass(x, param(1), parts.size() > 2 ? param(2) : rn::kPanpipeQ);
    }
    if (name == "movavg") {
      expect_params(1, 1);
      return rn::moving_average(x, param(1));
    }
    if (name == "qhold") {
      expect_params(1, 1);
      return rn::quantise_hold(x, param(1));
    }
    if (name == "qavg") {
      expect_params(1, 1);
      return rn::quantise_average(x, param(1));
    }
    if (name == "dsigma") {
      expect_params(1, 1);
      return rn::delta_sigma(x, param(1));
    }
    if (name == "integrate") {
      expect_params(0, 0);
      return rn::integrate(x);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError("stage '" + text + "': " + e.what());
  }
  throw UsageError("unknown stage '" + name + "' (expected lowpass1, svf, movavg, qhold, qavg, dsigma, integrate)");
}

// --- compare pipelines ---------------------------------------------------------

rn::AlgorithmSpec parse_pipeline(const std::string& text, const NoiseFlags& noise) {
  const auto parts = split_fields(text);
  const std::string name = parts.empty() ? "" : parts[0];
  auto param = [&](std::size_t i, std::optional<double> fallback = std::nullopt) {
    if (i < parts.size()) return parse_number(parts[i], "pipeline '" + text + "'");
    if (fallback) return *fallback;
    throw UsageError("pipeline '" + text + "': missing parameter " + std::to_string(i));
  };
  if (name == "panpipe") return rn::pipeline::Panpipe{rn::Hertz{param(1, 440.0)}, noise.legacy};

  const auto source = resolve_source(noise);
  if (name == "noise") return rn::pipeline::Noise{source};
  if (name == "lowpass1") return rn::pipeline::Lowpass{source, rn::Hertz{param(1)}};
  if (name == "svf") return rn::pipeline::StateVariable{source, rn::Hertz{param(1)}, param(2, rn::kPanpipeQ)};
  if (name == "qavg") return rn::pipeline::QuantiseAverage{source, rn::Seconds{param(1)}};
  if (name == "dsigma") return rn::pipeline::DeltaSigma{source, rn::Volts{param(1)}, rn::VoltSeconds{param(2)}};
  throw UsageError("unknown pipeline '" + text + "' (expected noise, lowpass1:fc, svf:fc[:q], qavg:t, dsigma:dc:y, panpipe[:pitch])");
}

std::string report_csv(const rn::ComparabilityReport& report) {
  std::ostringstream out;
  out.precision(9);
  out << "metric,r0,r1,value_at_r0,value_of_projected_r1,ratio,tolerance,pass\n";
  for (const auto& m : report.metrics) {
    out << m.name << ',' << report.r0 << ',' << report.r1 << ',' << m.value_at_r0 << ',' << m.value_of_projected_r1
        << ',' << m.ratio << ',' << m.tolerance << ',' << (m.pass ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling-rate-aware white noise toolkit"};
  app.require_subcommand(1);

  // gen-noise
  double gen_rate = 44100.0;
  double gen_duration = 1.0;
  std::uint64_t gen_seed = 0;
  NoiseFlags gen_noise;
  OutputFlags gen_out;
  auto* gen = app.add_subcommand("gen-noise", "Render white noise");
  gen->add_option("--sample-rate", gen_rate, "Sampling rate in Hz")->required()->check(CLI::PositiveNumber);
  gen->add_option("--duration", gen_duration, "Duration in seconds")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_seed, "PRNG seed")->capture_default_str();
  add_noise_flags(gen, gen_noise);
  add_output_flags(gen, gen_out);

  // process
  std::string proc_in;
  std::vector<std::string> proc_stages;
  OutputFlags proc_out;
  auto* proc = app.add_subcommand("process", "Apply processing stages to a WAV file, left to right");
  proc->add_option("--in", proc_in, "Input WAV written by this tool")->required();
  proc->add_option("--stage", proc_stages,
                   "Stage: lowpass1:fc | svf:fc[:q] | movavg:window | qhold:t | qavg:t | dsigma:y | integrate")
      ->required();
  add_output_flags(proc, proc_out);

  // compare
  std::string cmp_pipeline = "noise";
  double cmp_r0 = 11025.0;
  double cmp_r1 = 44100.0;
  std::size_t cmp_trials = 100;
  double cmp_tolerance = 0.10;
  double cmp_duration = 0.5;
  std::uint64_t cmp_seed = 0;
  std::string cmp_report;
  NoiseFlags cmp_noise;
  auto* cmp = app.add_subcommand("compare", "Check that a pipeline renders comparably at two rates");
  cmp->add_option("--pipeline", cmp_pipeline, "noise | lowpass1:fc | svf:fc[:q] | qavg:t | dsigma:dc:y | panpipe[:pitch]")
      ->capture_default_str();
  cmp->add_option("--r0", cmp_r0, "Low rate in Hz")->check(CLI::PositiveNumber)->capture_default_str();
  cmp->add_option("--r1", cmp_r1, "High rate in Hz, an integer multiple of --r0")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmp->add_option("--trials", cmp_trials, "Ensemble size")->capture_default_str();
  cmp->add_option("--tolerance", cmp_tolerance, "Allowed |ratio - 1|")->capture_default_str();
  cmp->add_option("--duration", cmp_duration, "Seconds per render")->capture_default_str();
  cmp->add_option("--seed", cmp_seed, "Master seed")->capture_default_str();
  cmp->add_option("--report", cmp_report, "Write the report as CSV");
  add_noise_flags(cmp, cmp_noise);

  // demo-panpipe
  double pan_rate = 44100.0;
  double pan_duration = 2.0;
  double pan_pitch = 440.0;
  bool pan_legacy = false;
  std::uint64_t pan_seed = 0;
  OutputFlags pan_out;
  auto* pan = app.add_subcommand("demo-panpipe", "Render the panpipe: resonant filtered noise plus a sine");
  pan->add_option("--sample-rate", pan_rate, "Sampling rate in Hz")->capture_default_str();
  pan->add_option("--duration", pan_duration, "Duration in seconds")->capture_default_str();
  pan->add_option("--pitch", pan_pitch, "Pitch in Hz")->capture_default_str();
  pan->add_flag("--legacy", pan_legacy, "Use fixed-amplitude noise (louder at low rates)");
  pan->add_option("--seed", pan_seed, "PRNG seed")->capture_default_str();
  add_output_flags(pan, pan_out);

  // figure
  std::string fig_dir;
  bool fig_rate_aware = false;
  std::uint64_t fig_seed = rn::NoiseFigureOptions{}.seed.value;
  auto* fig = app.add_subcommand("figure", "Write the 4x3 noise/filter table as CSV files");
  fig->add_option("--out-dir", fig_dir, "Output directory")->required();
  fig->add_flag("--rate-aware", fig_rate_aware, "Use rate-aware noise instead of fixed-amplitude noise");
  fig->add_option("--seed", fig_seed, "PRNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      const rn::SampleRate rate(gen_rate);
      const auto source = resolve_source(gen_noise);
      rn::DiscreteSignal noise(rate, {});
      double stddev = 0.0;
      double vsd = 0.0;
      if (const auto* aware = std::get_if<rn::RateAwareSource>(&source)) {
        noise = rn::white_noise(aware->spec, rate, gen_duration, rn::Seed{gen_seed}, aware->dist);
        stddev = aware->spec.stddev_at(rate);
        vsd = aware->spec.vsd();
      } else {
        const double amplitude = std::get<rn::LegacySource>(source).amplitude.value;
        noise = rn::white_noise_legacy(amplitude, rate, gen_duration, rn::Seed{gen_seed});
        stddev = amplitude / std::sqrt(3.0);
        vsd = stddev / std::sqrt(rate.hz());
      }
      const std::size_t clipped = write_output(gen_out, noise);
      print_stat("samples", static_cast<double>(noise.size()));
      print_stat("rate", rate.hz());
      print_stat("stddev", stddev);
      print_stat("vsd", vsd);
      if (noise.size() >= 2) print_stat("sample_stddev", rn::sample_stddev(noise.samples()));
      print_stat("clipped", static_cast<double>(clipped));
    } else if (*proc) {
      auto signal = rn::read_wav(proc_in, proc_out.full_scale);
      for (const auto& s : proc_stages) signal = apply_stage(s, signal);
      write_output(proc_out, signal);
      print_stat("samples", static_cast<double>(signal.size()));
      print_stat("rate", signal.rate().hz());
      if (!signal.empty()) print_stat("rms", rn::rms(signal));
    } else if (*cmp) {
      const auto algorithm = parse_pipeline(cmp_pipeline, cmp_noise);
      const auto report = rn::check_comparability(algorithm, rn::SampleRate(cmp_r0), rn::SampleRate(cmp_r1),
                                                  cmp_trials, cmp_tolerance, {cmp_duration, rn::Seed{cmp_seed}});
      std::printf("# %s at %g Hz vs %g Hz projected, %zu trials\n", rn::describe(algorithm).c_str(), cmp_r0, cmp_r1,
                  cmp_trials);
      for (const auto& m : report.metrics) {
        std::printf("# %-16s r0=%-12.6g projected=%-12.6g ratio=%.3f tol=%.3f %s\n", m.name.c_str(), m.value_at_r0,
                    m.value_of_projected_r1, m.ratio, m.tolerance, m.pass ? "PASS" : "FAIL");
      }
      for (const auto& m : report.metrics) std::printf("%s.ratio=%.3f\n", m.name.c_str(), m.ratio);
      std::printf("pass=%d\n", report.all_pass() ? 1 : 0);
      if (!cmp_report.empty()) rn::write_file_atomic(cmp_report, report_csv(report));
      return report.all_pass() ? kOk : kCompareFailed;
    } else if (*pan) {
      const double min_rate = 2.0 * pan_pitch * 6.0;
      if (!(pan_rate >= min_rate)) {
        throw UsageError("sample rate " + std::to_string(pan_rate) + " Hz is below " + std::to_string(min_rate) +
                         " Hz, the stability bound for the resonant filter at this pitch");
      }
      const rn::SampleRate rate(pan_rate);
      const rn::pipeline::Panpipe spec{rn::Hertz{pan_pitch}, pan_legacy};
      const auto mix = rn::render(spec, rate, pan_duration, rn::Seed{pan_seed});
      const auto branch = rn::render(rn::panpipe_noise_branch(spec), rate, pan_duration, rn::Seed{pan_seed});
      const std::size_t clipped = write_output(pan_out, mix);
      print_stat("samples", static_cast<double>(mix.size()));
      print_stat("rate", rate.hz());
      if (!mix.empty()) {
        print_stat("rms", rn::rms(mix));
        print_stat("noise_branch_rms", rn::rms(branch));
      }
      print_stat("clipped", static_cast<double>(clipped));
    } else if (*fig) {
      const auto files = rn::reproduce_noise_figure(fig_dir, {fig_rate_aware, rn::Seed{fig_seed}});
      for (const auto& f : files) std::printf("file=%s\n", f.string().c_str());
      print_stat("files", static_cast<double>(files.size()));
    }
  } catch (const rn::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kOk;
}
