#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ratenoise {

/// Samples per second. Always positive and finite.
class SampleRate {
 public:
  explicit SampleRate(double hz);

  double hz() const { return hz_; }

  bool operator==(const SampleRate&) const = default;

 private:
  double hz_;
};

/// A finite sequence of samples (volts by convention) at a fixed rate.
class DiscreteSignal {
 public:
  DiscreteSignal(SampleRate rate, std::vector<double> samples);

  SampleRate rate() const { return rate_; }
  std::span<const double> samples() const& { return samples_; }
  // A span into a temporary would dangle, e.g. in `for (x : f().samples())`.
  std::span<const double> samples() const&& = delete;
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  double operator[](std::size_t k) const { return samples_[k]; }

  /// Moves the sample storage out; the signal is left empty.
  std::vector<double> release() && { return std::move(samples_); }

  bool operator==(const DiscreteSignal&) const = default;

 private:
  SampleRate rate_;
  std::vector<double> samples_;
};

/// Length over rate, in seconds.
double duration(const DiscreteSignal& s);

/// Repeats every sample `factor` times; the rate is multiplied by `factor`.
DiscreteSignal upsample_constant(const DiscreteSignal& s, std::size_t factor);

/// Replaces each block of `factor` samples by its mean; the rate is divided
/// by `factor`. A trailing partial block is dropped.
DiscreteSignal downsample_average(const DiscreteSignal& s, std::size_t factor);

double rms(const DiscreteSignal& s);

/// Arithmetic mean of a block. Computed relative to the first element, so a
/// block of identical values yields exactly that value.
double block_mean(std::span<const double> block);

double mean(std::span<const double> xs);
/// Sample standard deviation with the n-1 denominator.
double sample_stddev(std::span<const double> xs);

/// Drops the first `count` samples (all of them if count exceeds the length).
DiscreteSignal drop_prefix(const DiscreteSignal& s, std::size_t count);

}  // namespace ratenoise
