#include "ratenoise/impulse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ratenoise {

DiscreteSignal threshold_clicks(const DiscreteSignal& noise, double target_hz, double noise_amplitude) {
  const double rate = noise.rate().hz();
  if (!(target_hz > 0.0) || !(target_hz < rate)) {
    throw std::invalid_argument("click frequency " + std::to_string(target_hz) +
                                " Hz must lie strictly between 0 and the rate " + std::to_string(rate) + " Hz");
  }
  if (!(noise_amplitude >= 0.0)) throw std::invalid_argument("noise amplitude must be non-negative");
  const double limit = noise_amplitude * target_hz / rate;
  std::vector<double> out(noise.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::abs(noise[k]) <= limit ? 1.0 : 0.0;
  return {noise.rate(), std::move(out)};
}

double rate_aware_click_threshold(double vsd, double target_hz, SampleRate rate) {
  return std::sqrt(3.0) * vsd * target_hz / std::sqrt(rate.hz());
}

DeltaSigmaResult delta_sigma_run(const DiscreteSignal& input, double threshold_vs) {
  if (!(threshold_vs > 0.0) || !std::isfinite(threshold_vs)) {
    throw std::invalid_argument("delta-sigma threshold must be positive, got " + std::to_string(threshold_vs));
  }
  const double rate = input.rate().hz();
  const double height = rate * threshold_vs;
  DeltaSigmaState state;
  std::vector<double> out(input.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    state.accumulator += (input[k] - state.previous_output) / rate;
    out[k] = state.accumulator > threshold_vs ? height : 0.0;
    state.previous_output = out[k];
  }
  return {DiscreteSignal(input.rate(), std::move(out)), state};
}

DiscreteSignal delta_sigma(const DiscreteSignal& input, double threshold_vs) {
  return delta_sigma_run(input, threshold_vs).output;
}

std::vector<double> impulse_gaps(const DiscreteSignal& impulses) {
  std::vector<double> gaps;
  bool seen = false;
  std::size_t last = 0;
  for (std::size_t k = 0; k < impulses.size(); ++k) {
    if (impulses[k] == 0.0) continue;
    if (seen) gaps.push_back(static_cast<double>(k - last) / impulses.rate().hz());
    seen = true;
    last = k;
  }
  return gaps;
}

std::size_t count_nonzero(const DiscreteSignal& s) {
  return static_cast<std::size_t>(std::count_if(s.samples().begin(), s.samples().end(), [](double x) { return x != 0.0; }));
}

}  // namespace ratenoise
