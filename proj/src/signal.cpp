#include "ratenoise/signal.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ratenoise {

SampleRate::SampleRate(double hz) : hz_(hz) {
  if (!(hz > 0.0) || !std::isfinite(hz)) {
    throw std::invalid_argument("sample rate must be positive and finite, got " + std::to_string(hz));
  }
}

DiscreteSignal::DiscreteSignal(SampleRate rate, std::vector<double> samples)
    : rate_(rate), samples_(std::move(samples)) {
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    if (!std::isfinite(samples_[k])) {
      throw std::invalid_argument("non-finite sample at index " + std::to_string(k));
    }
  }
}

double duration(const DiscreteSignal& s) { return static_cast<double>(s.size()) / s.rate().hz(); }

DiscreteSignal upsample_constant(const DiscreteSignal& s, std::size_t factor) {
  if (factor == 0) throw std::invalid_argument("upsample factor must be at least 1");
  std::vector<double> out;
  out.reserve(s.size() * factor);
  for (double x : s.samples()) out.insert(out.end(), factor, x);
  return {SampleRate(s.rate().hz() * static_cast<double>(factor)), std::move(out)};
}

DiscreteSignal downsample_average(const DiscreteSignal& s, std::size_t factor) {
  if (factor == 0) throw std::invalid_argument("downsample factor must be at least 1");
  const auto in = s.samples();
  const std::size_t blocks = in.size() / factor;
  std::vector<double> out(blocks);
  for (std::size_t b = 0; b < blocks; ++b) out[b] = block_mean(in.subspan(b * factor, factor));
  return {SampleRate(s.rate().hz() / static_cast<double>(factor)), std::move(out)};
}

double rms(const DiscreteSignal& s) {
  if (s.empty()) throw std::invalid_argument("rms of an empty signal");
  double acc = 0.0;
  for (double x : s.samples()) acc += x * x;
  return std::sqrt(acc / static_cast<double>(s.size()));
}

double block_mean(std::span<const double> block) {
  if (block.empty()) throw std::invalid_argument("mean of an empty block");
  const double first = block.front();
  double dev = 0.0;
  for (double x : block.subspan(1)) dev += x - first;
  return first + dev / static_cast<double>(block.size());
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of an empty sequence");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("stddev needs at least two values");
  const double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

DiscreteSignal drop_prefix(const DiscreteSignal& s, std::size_t count) {
  const auto in = s.samples();
  const std::size_t skip = std::min(count, in.size());
  return {s.rate(), std::vector<double>(in.begin() + static_cast<std::ptrdiff_t>(skip), in.end())};
}

}  // namespace ratenoise
