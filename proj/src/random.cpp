#include "ratenoise/random.hpp"

namespace ratenoise {

std::vector<double> stream(Seed seed, Distribution dist, std::size_t n) {
  SplitMix64 gen(seed);
  std::vector<double> out(n);
  switch (dist) {
    case Distribution::Uniform:
      for (auto& x : out) x = gen.next_symmetric();
      break;
    case Distribution::Triangular3:
      for (auto& x : out) {
        const double a = gen.next_symmetric();
        const double b = gen.next_symmetric();
        const double c = gen.next_symmetric();
        x = (a + b) + c;
      }
      break;
  }
  return out;
}

Seed split(Seed seed, std::uint64_t index) {
  SplitMix64 gen(Seed{seed.value ^ (index * 0x9e3779b97f4a7c15ULL)});
  return Seed{gen.next()};
}

double distribution_variance(Distribution dist) {
  switch (dist) {
    case Distribution::Uniform:
      return 1.0 / 3.0;
    case Distribution::Triangular3:
      return 1.0;
  }
  return 0.0;
}

}  // namespace ratenoise
