#include "ratenoise/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fft.hpp"

namespace ratenoise {

using detail::cplx;

namespace {

void require_nonempty(const DiscreteSignal& s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string(what) + " of an empty signal");
}

Spectrum make_spectrum(const DiscreteSignal& s, std::vector<cplx> coefficients) {
  const double width = s.rate().hz() / static_cast<double>(s.size());
  return {s.rate(), std::move(coefficients), width};
}

}  // namespace

Spectrum dft_direct(const DiscreteSignal& s) {
  require_nonempty(s, "dft");
  const std::size_t n = s.size();

  // roots[n-m] is built as the exact conjugate of roots[m]; for even n the
  // self-paired root at n/2 is exactly -1.
  std::vector<cplx> roots(n);
  for (std::size_t m = 0; 2 * m < n; ++m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    roots[m] = {std::cos(angle), std::sin(angle)};
    if (m != 0) roots[n - m] = std::conj(roots[m]);
  }
  if (n % 2 == 0) roots[n / 2] = {-1.0, 0.0};

  const double r = s.rate().hz();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc{0.0, 0.0};
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += s[j] * roots[idx];
      idx += k;
      if (idx >= n) idx -= n;
    }
    out[k] = acc / r;
  }
  return make_spectrum(s, std::move(out));
}

Spectrum dft(const DiscreteSignal& s) {
  require_nonempty(s, "dft");
  if (s.size() <= kDirectDftLimit) return dft_direct(s);
  std::vector<cplx> x(s.samples().begin(), s.samples().end());
  auto out = detail::fft_any(x, +1);
  const double r = s.rate().hz();
  for (auto& c : out) c /= r;
  return make_spectrum(s, std::move(out));
}

OneSidedSpectrum magnitude_spectrum(const DiscreteSignal& s) {
  const Spectrum full = dft(s);
  std::vector<double> mags(s.size() / 2 + 1);
  for (std::size_t k = 0; k < mags.size(); ++k) mags[k] = std::abs(full.coefficients[k]);
  return {full.bin_width, std::move(mags)};
}

AutocovarianceSeq autocovariance_direct(const DiscreteSignal& s, std::size_t max_lag) {
  const std::size_t n = s.size();
  if (max_lag >= n) {
    throw std::invalid_argument("max lag " + std::to_string(max_lag) + " must be below the signal length " +
                                std::to_string(n));
  }
  std::vector<double> values(max_lag + 1);
  for (std::size_t d = 0; d <= max_lag; ++d) {
    double acc = 0.0;
    for (std::size_t k = 0; k + d < n; ++k) acc += s[k] * s[k + d];
    values[d] = acc / static_cast<double>(n);
  }
  return {s.rate(), std::move(values)};
}

AutocovarianceSeq autocovariance(const DiscreteSignal& s, std::size_t max_lag) {
  const std::size_t n = s.size();
  if (max_lag >= n) {
    throw std::invalid_argument("max lag " + std::to_string(max_lag) + " must be below the signal length " +
                                std::to_string(n));
  }
  if (n * (max_lag + 1) <= (std::size_t{1} << 22)) return autocovariance_direct(s, max_lag);

  // Zero padding to at least 2n makes the circular correlation linear.
  std::vector<cplx> a(detail::next_pow2(2 * n));
  for (std::size_t k = 0; k < n; ++k) a[k] = s[k];
  detail::fft_pow2(a, -1);
  for (auto& c : a) c = std::norm(c);
  detail::fft_pow2(a, +1);
  const double scale = 1.0 / (static_cast<double>(a.size()) * static_cast<double>(n));
  std::vector<double> values(max_lag + 1);
  for (std::size_t d = 0; d <= max_lag; ++d) values[d] = a[d].real() * scale;
  return {s.rate(), std::move(values)};
}

Spectrum noise_spectral_density(const DiscreteSignal& s, std::size_t max_lag) {
  const auto cov = autocovariance(s, max_lag);
  const std::size_t len = 2 * max_lag + 1;
  std::vector<double> sym(len);
  sym[0] = cov.values[0];
  for (std::size_t d = 1; d <= max_lag; ++d) sym[d] = sym[len - d] = cov.values[d];
  Spectrum density = dft(DiscreteSignal(s.rate(), std::move(sym)));
  // The mirrored sequence is even, so the imaginary parts are rounding noise.
  for (auto& c : density.coefficients) c = {c.real(), 0.0};
  return density;
}

Spectrum noise_spectral_density(const DiscreteSignal& s) {
  require_nonempty(s, "noise spectral density");
  return noise_spectral_density(s, s.size() / 10);
}

double mean_density(const Spectrum& density, double lo_hz, double hi_hz) {
  const std::size_t half = density.coefficients.size() / 2;
  double acc = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k <= half; ++k) {
    const double f = density.frequency(k);
    if (f > lo_hz && f < hi_hz) {
      acc += density.coefficients[k].real();
      ++count;
    }
  }
  if (count == 0) throw std::invalid_argument("no density bins inside the requested band");
  return acc / static_cast<double>(count);
}

std::vector<OctaveBand> octave_band_means(const Spectrum& density, std::size_t min_bins) {
  if (min_bins == 0) throw std::invalid_argument("octave bands need at least one bin");
  const std::size_t end = density.coefficients.size() / 2 + 1;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t lo = min_bins; lo < end; lo *= 2) ranges.emplace_back(lo, std::min(2 * lo, end));
  if (ranges.size() > 1 && ranges.back().second - ranges.back().first < min_bins) {
    ranges[ranges.size() - 2].second = ranges.back().second;
    ranges.pop_back();
  }

  std::vector<OctaveBand> bands;
  for (auto [lo, hi] : ranges) {
    double acc = 0.0;
    for (std::size_t k = lo; k < hi; ++k) acc += density.coefficients[k].real();
    bands.push_back({density.frequency(lo), density.frequency(hi), hi - lo, acc / static_cast<double>(hi - lo)});
  }
  return bands;
}

std::vector<double> ensemble_bin_variances(const NoiseConfig& gen, std::size_t trials) {
  if (trials < 2) throw std::invalid_argument("ensemble estimates need at least two trials");
  std::vector<std::vector<cplx>> spectra;
  spectra.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const auto noise = white_noise(gen.spec, gen.rate, gen.duration_s, split(gen.master, i), gen.dist);
    if (noise.empty()) throw std::invalid_argument("ensemble noise configuration renders no samples");
    spectra.push_back(dft(noise).coefficients);
  }

  const std::size_t n = spectra.front().size();
  const double t = static_cast<double>(trials);
  std::vector<double> variances(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx m{0.0, 0.0};
    for (const auto& sp : spectra) m += sp[k];
    m /= t;
    double acc = 0.0;
    for (const auto& sp : spectra) acc += std::norm(sp[k] - m);
    variances[k] = acc / (t - 1.0);
  }
  return variances;
}

double ensemble_spectrum_stddev(const NoiseConfig& gen, std::size_t trials, std::size_t bin) {
  const auto variances = ensemble_bin_variances(gen, trials);
  if (bin >= variances.size()) {
    throw std::invalid_argument("bin " + std::to_string(bin) + " out of range for " +
                                std::to_string(variances.size()) + " coefficients");
  }
  return std::sqrt(variances[bin]);
}

}  // namespace ratenoise
