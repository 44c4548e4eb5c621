#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ratenoise/noise.hpp"
#include "ratenoise/random.hpp"
#include "ratenoise/signal.hpp"
#include "ratenoise/units.hpp"

namespace ratenoise {

// Abstract algorithms. Every parameter is a physical quantity (V, s, Hz, V*s)
// or dimensionless; none of these types accepts a SampleRate, so a pipeline
// cannot refer to the rate it will be rendered at.

/// Noise whose variance follows the rendering rate.
struct RateAwareSource {
  NoiseSpec spec;
  Distribution dist = Distribution::Uniform;
};

/// Uniform noise on [-amplitude, amplitude] at every rate.
struct LegacySource {
  Volts amplitude;
};

using NoiseSource = std::variant<RateAwareSource, LegacySource>;

namespace pipeline {

struct Noise {
  NoiseSource source;
};

struct Lowpass {
  NoiseSource source;
  Hertz cutoff;
};

struct StateVariable {
  NoiseSource source;
  Hertz resonance;
  double q = 5.0;
};

struct QuantiseAverage {
  NoiseSource source;
  Seconds period;
};

/// Noise plus a DC offset, fed to a delta-sigma impulse generator.
struct DeltaSigma {
  NoiseSource source;
  Volts dc_offset;
  VoltSeconds threshold;
};

/// Resonant low-passed noise mixed 1:1 with a sine at the same pitch. Both
/// branches are scaled to 0.25 V RMS at the 44100 Hz reference.
struct Panpipe {
  Hertz pitch{440.0};
  bool legacy = false;
};

}  // namespace pipeline

using AlgorithmSpec = std::variant<pipeline::Noise, pipeline::Lowpass, pipeline::StateVariable,
                                   pipeline::QuantiseAverage, pipeline::DeltaSigma, pipeline::Panpipe>;

/// Short human-readable description, e.g. "noise(vsd=0.00467)->svf(500 Hz, q=5)".
std::string describe(const AlgorithmSpec& algorithm);

/// Resonance q used by the panpipe's noise branch.
inline constexpr double kPanpipeQ = 5.0;
/// Per-branch RMS of the panpipe at the reference rate.
inline constexpr double kPanpipeBranchRms = 0.25;
inline constexpr double kPanpipeReferenceRate = 44100.0;

/// The noise-to-svf stage of a panpipe, with the noise level normalised.
pipeline::StateVariable panpipe_noise_branch(const pipeline::Panpipe& p);

/// Renders `algorithm` at `rate`. Stage parameter errors are reported as
/// std::invalid_argument naming the stage.
DiscreteSignal render(const AlgorithmSpec& algorithm, SampleRate rate, double duration_s, Seed seed);

/// Time to discard before measuring: five time constants of the filter stage
/// (1/(2*pi*fc) for the one-pole, q/(2*pi*fc) for the SVF), zero otherwise.
double transient_seconds(const AlgorithmSpec& algorithm);

struct MetricResult {
  std::string name;
  double value_at_r0;
  double value_of_projected_r1;
  double ratio;
  double tolerance;
  bool pass;
};

struct ComparabilityReport {
  double r0;
  double r1;
  std::vector<MetricResult> metrics;

  bool all_pass() const;
  const MetricResult& metric(const std::string& name) const;
};

struct CompareOptions {
  double duration_s = 0.5;
  Seed master{0};
};

/// Renders at r0 and r1 for `trials` seeds split from options.master (the
/// same seed at both rates), projects the r1 render to r0 with
/// downsample_average, and compares trial-averaged statistics:
///   rms, nsd_in_band (mean density over (0, r0/2)),
///   impulse_rate (delta-sigma pipelines), noise_branch_rms (panpipe).
/// A metric passes when |value_at_r0 / value_of_projected_r1 - 1| <= tolerance.
/// Requires r1/r0 to be a positive integer and trials >= 10.
ComparabilityReport check_comparability(const AlgorithmSpec& algorithm, SampleRate r0, SampleRate r1,
                                        std::size_t trials, double tolerance, const CompareOptions& options = {});

/// Rate pairs checked when none are given.
std::vector<std::pair<SampleRate, SampleRate>> default_rate_pairs();

struct NoiseFigureOptions {
  /// Renders rate-aware noise (1 V stddev at 11025 Hz) instead of the
  /// conventional fixed-amplitude noise.
  bool rate_aware = false;
  Seed seed{20100501};
  double duration_s = 0.05;
};

/// Writes the 4x3 table of the noise/filter comparison: columns low (11025 Hz),
/// upsampled (low noise repeated 4x to 44100 Hz) and high (44100 Hz); rows raw,
/// lowpass (one-pole 500 Hz), svf (500 Hz, q=5) and spectrum (one-sided
/// magnitude). Files are named "<column>_<row>.csv". Returns the paths written.
std::vector<std::filesystem::path> reproduce_noise_figure(const std::filesystem::path& out_dir,
                                                          const NoiseFigureOptions& options = {});

}  // namespace ratenoise
