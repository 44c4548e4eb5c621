#include "ratenoise/quantise.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ratenoise {

std::size_t period_in_samples(double period_s, SampleRate rate) {
  if (!(period_s > 0.0) || !std::isfinite(period_s)) {
    throw std::invalid_argument("quantisation period must be positive");
  }
  const double d = period_s * rate.hz();
  const double nearest = std::nearbyint(d);
  if (nearest >= 1.0 && std::abs(d - nearest) <= 1e-9 * nearest) return static_cast<std::size_t>(nearest);

  std::ostringstream msg;
  msg.precision(12);
  msg << "quantisation period " << period_s << " s is " << d << " samples at " << rate.hz()
      << " Hz, not a positive integer; nearest valid periods: ";
  const double lo = std::floor(d);
  if (lo >= 1.0) msg << lo / rate.hz() << " s (" << lo << " samples), ";
  msg << (lo + 1.0) / rate.hz() << " s (" << lo + 1.0 << " samples)";
  throw std::invalid_argument(msg.str());
}

DiscreteSignal quantise_hold(const DiscreteSignal& s, double period_s) {
  const std::size_t d = period_in_samples(period_s, s.rate());
  if (s.empty()) throw std::invalid_argument("cannot quantise an empty signal");
  std::vector<double> out(s.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = s[k - k % d];
  return {s.rate(), std::move(out)};
}

DiscreteSignal quantise_average(const DiscreteSignal& s, double period_s) {
  const std::size_t d = period_in_samples(period_s, s.rate());
  if (s.empty()) throw std::invalid_argument("cannot quantise an empty signal");
  return upsample_constant(downsample_average(s, d), d);
}

}  // namespace ratenoise
