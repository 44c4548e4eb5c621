#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ratenoise {

struct Seed {
  std::uint64_t value = 0;

  bool operator==(const Seed&) const = default;
};

enum class Distribution {
  /// Uniform on [-1, 1), variance 1/3.
  Uniform,
  /// Sum of three Uniform draws: support [-3, 3], variance 1, density shaped
  /// like a quadratic B-spline.
  Triangular3,
};

/// SplitMix64 (Steele, Lea, Flood 2014). The whole state is one 64-bit word.
class SplitMix64 {
 public:
  explicit SplitMix64(Seed seed) : state_(seed.value) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// 53 high bits mapped to [0, 1), then affinely to [-1, 1).
  double next_symmetric() {
    const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return 2.0 * unit - 1.0;
  }

 private:
  std::uint64_t state_;
};

/// The first `n` values of the stream for (seed, dist). Streams are prefix
/// consistent: stream(s, d, m) is a prefix of stream(s, d, n) for m <= n.
std::vector<double> stream(Seed seed, Distribution dist, std::size_t n);

/// Derives an independent seed for substream `index`.
Seed split(Seed seed, std::uint64_t index);

/// Variance of one draw from `dist`.
double distribution_variance(Distribution dist);

}  // namespace ratenoise
