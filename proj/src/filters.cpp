#include "ratenoise/filters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ratenoise/noise.hpp"

namespace ratenoise {

namespace {

void require_below_nyquist(const char* what, double freq_hz, SampleRate rate) {
  if (!(freq_hz > 0.0) || !(freq_hz < rate.hz() / 2.0)) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(freq_hz) +
                                " Hz must lie strictly between 0 and rate/2 = " +
                                std::to_string(rate.hz() / 2.0) + " Hz");
  }
}

}  // namespace

DiscreteSignal moving_average(const DiscreteSignal& s, double window_s) {
  if (!(window_s > 0.0) || !std::isfinite(window_s)) {
    throw std::invalid_argument("moving average window must be positive");
  }
  const double w_real = std::nearbyint(window_s * s.rate().hz());
  if (w_real < 1.0) {
    throw std::invalid_argument("moving average window " + std::to_string(window_s) +
                                " s is shorter than one sample period");
  }
  const auto w = static_cast<std::size_t>(w_real);
  if (s.size() < w) {
    throw std::invalid_argument("signal of " + std::to_string(s.size()) + " samples is shorter than window of " +
                                std::to_string(w));
  }
  const auto in = s.samples();
  std::vector<double> out(in.size() - w + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    double acc = 0.0;
    for (std::size_t j = k; j < k + w; ++j) acc += in[j];
    out[k] = acc / static_cast<double>(w);
  }
  return {s.rate(), std::move(out)};
}

DiscreteSignal first_order_lowpass(const DiscreteSignal& s, double cutoff_hz) {
  require_below_nyquist("cut-off", cutoff_hz, s.rate());
  const double a = std::exp(-2.0 * std::numbers::pi * cutoff_hz / s.rate().hz());
  const double b = 1.0 - a;
  std::vector<double> out(s.size());
  double y = 0.0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    y = a * y + b * s[k];
    out[k] = y;
  }
  return {s.rate(), std::move(out)};
}

DiscreteSignal state_variable_lowpass(const DiscreteSignal& s, double resonance_hz, double q) {
  if (!(resonance_hz > 0.0) || !(resonance_hz < s.rate().hz() / 6.0)) {
    throw std::invalid_argument("resonance " + std::to_string(resonance_hz) +
                                " Hz must lie strictly between 0 and rate/6 = " +
                                std::to_string(s.rate().hz() / 6.0) + " Hz");
  }
  if (!(q >= 0.5) || !std::isfinite(q)) {
    throw std::invalid_argument("q must be at least 0.5, got " + std::to_string(q));
  }
  const double f1 = 2.0 * std::sin(std::numbers::pi * resonance_hz / s.rate().hz());
  const double damping = 1.0 / q;
  double low = 0.0;
  double band = 0.0;
  std::vector<double> out(s.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    low += f1 * band;
    const double high = s[k] - low - damping * band;
    band += f1 * high;
    out[k] = low;
  }
  return {s.rate(), std::move(out)};
}

DiscreteSignal sine_oscillator(double freq_hz, double amplitude, SampleRate rate, double duration_s, double phase) {
  require_below_nyquist("oscillator frequency", freq_hz, rate);
  const std::size_t n = sample_count(duration_s, rate);
  const double step = 2.0 * std::numbers::pi * freq_hz / rate.hz();
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = amplitude * std::sin(step * static_cast<double>(k) + phase);
  return {rate, std::move(out)};
}

DiscreteSignal integrate(const DiscreteSignal& s) {
  std::vector<double> out(s.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    sum += s[k];
    out[k] = sum / s.rate().hz();
  }
  return {s.rate(), std::move(out)};
}

}  // namespace ratenoise
