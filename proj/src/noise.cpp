#include "ratenoise/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ratenoise {

NoiseSpec NoiseSpec::from_vsd(double vsd) {
  if (!(vsd >= 0.0) || !std::isfinite(vsd)) {
    throw std::invalid_argument("vsd must be finite and non-negative");
  }
  return NoiseSpec(vsd);
}

NoiseSpec NoiseSpec::from_reference(double y_volts, SampleRate reference) {
  if (!(y_volts >= 0.0) || !std::isfinite(y_volts)) {
    throw std::invalid_argument("reference amplitude must be finite and non-negative");
  }
  return NoiseSpec(y_volts / std::sqrt(reference.hz()));
}

double NoiseSpec::stddev_at(SampleRate rate) const { return vsd_ * std::sqrt(rate.hz()); }

std::size_t sample_count(double duration_s, SampleRate rate) {
  if (!(duration_s >= 0.0) || !std::isfinite(duration_s)) {
    throw std::invalid_argument("duration must be finite and non-negative, got " + std::to_string(duration_s));
  }
  // nearbyint honours the default round-to-nearest-even mode.
  return static_cast<std::size_t>(std::nearbyint(duration_s * rate.hz()));
}

DiscreteSignal white_noise(const NoiseSpec& spec, SampleRate rate, double duration_s, Seed seed,
                           Distribution dist) {
  const std::size_t n = sample_count(duration_s, rate);
  const double sigma = spec.stddev_at(rate);
  const double scale = dist == Distribution::Uniform ? std::sqrt(3.0) * sigma : sigma;
  auto xs = stream(seed, dist, n);
  for (auto& x : xs) x *= scale;
  return {rate, std::move(xs)};
}

DiscreteSignal white_noise_legacy(double amplitude, SampleRate rate, double duration_s, Seed seed) {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("amplitude must be finite and non-negative");
  }
  const std::size_t n = sample_count(duration_s, rate);
  auto xs = stream(seed, Distribution::Uniform, n);
  for (auto& x : xs) x *= amplitude;
  return {rate, std::move(xs)};
}

}  // namespace ratenoise
