#pragma once

#include <cstddef>

#include "ratenoise/random.hpp"
#include "ratenoise/signal.hpp"

namespace ratenoise {

/// Amplitude of sampling-rate-aware white noise.
///
/// The canonical quantity is the voltage spectral density value (V*sqrt(s)):
/// one sample rendered at rate r has standard deviation vsd * sqrt(r). The
/// friendlier (y, f) form means "standard deviation y volts when rendered at
/// reference rate f"; it converts to vsd = y / sqrt(f).
class NoiseSpec {
 public:
  static NoiseSpec from_vsd(double vsd);
  static NoiseSpec from_reference(double y_volts, SampleRate reference);

  double vsd() const { return vsd_; }
  /// Population standard deviation of a sample rendered at `rate`.
  double stddev_at(SampleRate rate) const;

  bool operator==(const NoiseSpec&) const = default;

 private:
  explicit NoiseSpec(double vsd) : vsd_(vsd) {}
  double vsd_;
};

/// round(dur * rate), ties to even. Throws on negative or non-finite input.
std::size_t sample_count(double duration_s, SampleRate rate);

/// White noise whose variance is proportional to the sampling rate.
DiscreteSignal white_noise(const NoiseSpec& spec, SampleRate rate, double duration_s, Seed seed,
                           Distribution dist = Distribution::Uniform);

/// Uniform noise on [-amplitude, amplitude] regardless of rate. This is the
/// conventional generator whose filtered output gets quieter as the rate rises.
DiscreteSignal white_noise_legacy(double amplitude, SampleRate rate, double duration_s, Seed seed);

}  // namespace ratenoise
