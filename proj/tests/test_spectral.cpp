#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ratenoise/filters.hpp"
#include "ratenoise/noise.hpp"
#include "ratenoise/spectral.hpp"

using namespace ratenoise;

namespace {

DiscreteSignal gaussian(std::mt19937_64& gen, std::size_t n, double rate) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> xs(n);
  for (auto& x : xs) x = dist(gen);
  return {SampleRate(rate), std::move(xs)};
}

double max_abs_diff(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double max_abs(const std::vector<std::complex<double>>& a) {
  double m = 0.0;
  for (const auto& c : a) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("dft of a constant") {
    for (std::size_t n : {1, 7, 64, 4096, 5000}) {
      const double c = 0.37;
      const double r = 44100.0;
      const auto sp = dft(DiscreteSignal(SampleRate(r), std::vector<double>(n, c)));
      const double peak = static_cast<double>(n) * c / r;
      CHECK(std::abs(sp.coefficients[0] - std::complex<double>(peak, 0.0)) <= 1e-12 * peak);
      for (std::size_t k = 1; k < n; ++k) REQUIRE(std::abs(sp.coefficients[k]) <= 1e-12 * peak);
      CHECK(sp.bin_width == doctest::Approx(r / static_cast<double>(n)));
    }
  }

  TEST_CASE("dft of a unit impulse") {
    for (std::size_t n : {5, 256, 4097}) {
      std::vector<double> x(n, 0.0);
      x[0] = 1.0;
      const auto sp = dft(DiscreteSignal(SampleRate(8000), x));
      for (const auto& c : sp.coefficients) REQUIRE(std::abs(c - std::complex<double>(1.0 / 8000.0, 0.0)) <= 1e-12 / 8000.0);
    }
  }

  TEST_CASE("dft matches the long-double oracle, including the fast path") {
    std::mt19937_64 gen(2);
    for (std::size_t n : {12, 100, 1024, 4100, 6000, 8192}) {
      const auto x = gaussian(gen, n, 11025.0);
      const auto expected = oracle::dft(x.samples(), 11025.0);
      const auto got = dft(x).coefficients;
      CHECK(max_abs_diff(got, expected) <= 1e-12 * max_abs(expected));
    }
  }

  TEST_CASE("positive exponent sign") {
    // A complex exponential of positive frequency m lands in bin n-m under the
    // positive-exponent convention; for sin(2 pi m j/n) bin m holds -i*n/(2r).
    const std::size_t n = 64;
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = std::sin(2.0 * std::numbers::pi * 3.0 * static_cast<double>(j) / n);
    const auto sp = dft(DiscreteSignal(SampleRate(1), x));
    CHECK(sp.coefficients[3].imag() == doctest::Approx(n / 2.0).epsilon(1e-12));
    CHECK(sp.coefficients[n - 3].imag() == doctest::Approx(-(n / 2.0)).epsilon(1e-12));
  }

  TEST_CASE("conjugate symmetry is exact on the direct path") {
    std::mt19937_64 gen(5);
    for (std::size_t n : {9, 64, 1000}) {
      const auto sp = dft(gaussian(gen, n, 44100.0));
      for (std::size_t k = 1; k < n; ++k) REQUIRE(sp.coefficients[n - k] == std::conj(sp.coefficients[k]));
    }
    const auto big = dft(gaussian(gen, 6000, 44100.0));
    const double scale = max_abs(big.coefficients);
    for (std::size_t k = 1; k < 6000; ++k) {
      REQUIRE(std::abs(big.coefficients[6000 - k] - std::conj(big.coefficients[k])) <= 1e-12 * scale);
    }
  }

  TEST_CASE("property: Parseval under the 1/r normalisation") {
    std::mt19937_64 gen(6);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + gen() % 6000;
      const double r = 1000.0 + static_cast<double>(gen() % 96000);
      const auto x = gaussian(gen, n, r);
      long double lhs = 0.0L;
      for (const auto& c : dft(x).coefficients) lhs += std::norm(c);
      long double energy = 0.0L;
      for (double v : x.samples()) energy += v * v;
      const long double rhs = static_cast<long double>(n) / (r * r) * energy;
      CHECK(std::abs(static_cast<double>(lhs / rhs) - 1.0) < 1e-12);
    }
  }

  TEST_CASE("property: linearity of dft") {
    std::mt19937_64 gen(7);
    for (std::size_t n : {33, 5000}) {
      const auto x = gaussian(gen, n, 100.0);
      const auto z = gaussian(gen, n, 100.0);
      std::vector<double> mix(n);
      for (std::size_t k = 0; k < n; ++k) mix[k] = 2.0 * x[k] - 0.5 * z[k];
      const auto lhs = dft(DiscreteSignal(SampleRate(100), mix)).coefficients;
      const auto fx = dft(x).coefficients;
      const auto fz = dft(z).coefficients;
      std::vector<std::complex<double>> rhs(n);
      for (std::size_t k = 0; k < n; ++k) rhs[k] = 2.0 * fx[k] - 0.5 * fz[k];
      CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * max_abs(lhs));
    }
  }

  TEST_CASE("dft rejects empty signals") {
    CHECK_THROWS_AS(dft(DiscreteSignal(SampleRate(1), {})), std::invalid_argument);
    CHECK_THROWS_AS(magnitude_spectrum(DiscreteSignal(SampleRate(1), {})), std::invalid_argument);
  }

  TEST_CASE("magnitude_spectrum") {
    const auto zero = magnitude_spectrum(DiscreteSignal(SampleRate(100), std::vector<double>(10, 0.0)));
    CHECK(zero.magnitudes.size() == 6);
    for (double m : zero.magnitudes) CHECK(m == 0.0);

    // 20 periods in 1000 samples at 8000 Hz.
    const double a = 0.6;
    const double r = 8000.0;
    const auto tone = sine_oscillator(160.0, a, SampleRate(r), 1000.0 / r);
    const auto sp = magnitude_spectrum(tone);
    const double peak = a * 1000.0 / (2.0 * r);
    CHECK(sp.magnitudes[20] == doctest::Approx(peak).epsilon(1e-12));
    CHECK(sp.frequency(20) == doctest::Approx(160.0));
    for (std::size_t k = 0; k < sp.magnitudes.size(); ++k) {
      if (k != 20) REQUIRE(sp.magnitudes[k] < 1e-9 * peak);
    }
  }

  TEST_CASE("autocovariance") {
    const DiscreteSignal c(SampleRate(10), std::vector<double>(50, 2.0));
    const auto cov = autocovariance(c, 10);
    for (std::size_t d = 0; d <= 10; ++d) CHECK(cov.values[d] == doctest::Approx(4.0 * (50.0 - d) / 50.0));

    const auto z = autocovariance(DiscreteSignal(SampleRate(10), std::vector<double>(20, 0.0)), 5);
    for (double v : z.values) CHECK(v == 0.0);

    CHECK_THROWS_AS(autocovariance(c, 50), std::invalid_argument);
  }

  TEST_CASE("fast autocovariance agrees with the direct sum") {
    std::mt19937_64 gen(8);
    const auto x = gaussian(gen, 30000, 44100.0);
    const auto fast = autocovariance(x, 300);
    const auto direct = autocovariance_direct(x, 300);
    for (std::size_t d = 0; d <= 300; ++d) REQUIRE(std::abs(fast.values[d] - direct.values[d]) < 1e-12);
  }

  TEST_CASE("white-noise autocovariance is an impulse at lag 0") {
    const SampleRate r(44100);
    const auto x = white_noise(NoiseSpec::from_reference(1.0, r), r, 1.0e6 / 44100.0, Seed{19});
    const auto cov = autocovariance(x, 100);
    CHECK(std::abs(cov.values[0] - 1.0) < 0.01);
    for (std::size_t d = 1; d <= 100; ++d) REQUIRE(std::abs(cov.values[d]) < 4.0 / std::sqrt(1.0e6));
  }

  TEST_CASE("noise spectral density of white noise is flat at vsd^2") {
    const SampleRate r(44100);
    const double vsd = 0.00467;
    const auto x = white_noise(NoiseSpec::from_vsd(vsd), r, 200000.0 / 44100.0, Seed{23});
    const auto density = noise_spectral_density(x);
    CHECK(density.coefficients.size() == 2 * 20000 + 1);
    const double m = mean_density(density, 0.0, r.hz() / 2.0);
    CHECK(std::abs(m / (vsd * vsd) - 1.0) < 0.10);

    const auto bands = octave_band_means(density);
    double lo = INFINITY;
    double hi = 0.0;
    for (const auto& b : bands) {
      lo = std::min(lo, b.mean);
      hi = std::max(hi, b.mean);
    }
    CHECK(bands.size() >= 5);
    CHECK(hi / lo < 1.5);

    const auto z = noise_spectral_density(DiscreteSignal(r, std::vector<double>(100, 0.0)));
    for (const auto& c : z.coefficients) CHECK(c == std::complex<double>(0.0, 0.0));
  }

  TEST_CASE("in-band density agrees between 11025 and 44100 Hz") {
    const double vsd = 0.003;
    double lo_mean = 0.0;
    double hi_mean = 0.0;
    for (std::uint64_t i = 0; i < 10; ++i) {
      const auto lo = white_noise(NoiseSpec::from_vsd(vsd), SampleRate(11025), 1.0, split(Seed{1}, i));
      const auto hi = white_noise(NoiseSpec::from_vsd(vsd), SampleRate(44100), 1.0, split(Seed{2}, i));
      lo_mean += mean_density(noise_spectral_density(lo, 1000), 0.0, 5512.5);
      hi_mean += mean_density(noise_spectral_density(hi, 4000), 0.0, 5512.5);
    }
    CHECK(std::abs(lo_mean / hi_mean - 1.0) < 0.10);
  }

  TEST_CASE("octave bands") {
    const SampleRate r(1000);
    Spectrum flat{r, std::vector<std::complex<double>>(2001, {3.0, 0.0}), 0.5};
    // One-sided bins 0..1000: [100,200) [200,400) [400,800) [800,1001).
    const auto bands = octave_band_means(flat, 100);
    REQUIRE(bands.size() == 4);
    CHECK(bands[0].bins == 100);
    CHECK(bands[0].lo_hz == 50.0);
    CHECK(bands[3].bins == 201);
    for (const auto& b : bands) CHECK(b.mean == 3.0);

    // Bins 0..850: the 51-bin tail [800,851) joins [400,800).
    Spectrum shorter{r, std::vector<std::complex<double>>(1701, {2.0, 0.0}), 0.5};
    const auto merged = octave_band_means(shorter, 100);
    REQUIRE(merged.size() == 3);
    CHECK(merged[2].bins == 451);
    CHECK(merged[2].hi_hz == 425.5);
  }

  TEST_CASE("ensemble spectrum stddev") {
    const SampleRate r(44100);
    const double l = 4096.0 / 44100.0;
    const NoiseConfig base{NoiseSpec::from_reference(1.0, r), r, l, Seed{500}};
    const double expected = std::sqrt(l / r.hz());
    CHECK(expected == doctest::Approx(1.451e-3).epsilon(1e-3));
    const double s1 = ensemble_spectrum_stddev(base, 200, 100);
    CHECK(std::abs(s1 / expected - 1.0) < 0.10);

    NoiseConfig doubled = base;
    doubled.spec = NoiseSpec::from_reference(2.0, r);
    CHECK(ensemble_spectrum_stddev(doubled, 200, 100) / s1 == doctest::Approx(2.0).epsilon(1e-9));

    // Fixed vsd and duration: sqrt(l/r)*y = sqrt(l)*vsd at either rate.
    const SampleRate low(11025);
    const NoiseConfig low_cfg{NoiseSpec::from_reference(1.0, r), low, l, Seed{501}};
    CHECK(std::abs(ensemble_spectrum_stddev(low_cfg, 200, 25) / s1 - 1.0) < 0.10);

    CHECK_THROWS_AS(ensemble_spectrum_stddev(base, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ensemble_spectrum_stddev(base, 2, 4096), std::invalid_argument);
  }
}
