#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "oracles.hpp"
#include "ratenoise/noise.hpp"
#include "ratenoise/quantise.hpp"

using namespace ratenoise;

namespace {

std::vector<double> values(const DiscreteSignal& s) { return {s.samples().begin(), s.samples().end()}; }

/// Ensemble stddev of one held value per block, so every value is independent.
double ensemble_block_stddev(bool averaging, double vsd, double rate, double period, int trials) {
  std::vector<double> held;
  const auto d = static_cast<std::size_t>(std::llround(period * rate));
  for (int i = 0; i < trials; ++i) {
    const auto x = white_noise(NoiseSpec::from_vsd(vsd), SampleRate(rate), 0.25, split(Seed{808}, static_cast<std::uint64_t>(i)));
    const auto q = averaging ? quantise_average(x, period) : quantise_hold(x, period);
    for (std::size_t k = 0; k < q.size(); k += d) held.push_back(q[k]);
  }
  return oracle::moments(held).stddev;
}

}  // namespace

TEST_SUITE("quantise") {
  TEST_CASE("period validation") {
    CHECK(period_in_samples(0.01, SampleRate(44100)) == 441);
    CHECK(period_in_samples(1.0 / 441.0, SampleRate(11025)) == 25);
    CHECK(period_in_samples(1.0 / 441.0, SampleRate(44100)) == 100);
    try {
      period_in_samples(0.003, SampleRate(44100));
      FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
      const std::string msg = e.what();
      CHECK(msg.find("132.3") != std::string::npos);
      CHECK(msg.find("132 samples") != std::string::npos);
      CHECK(msg.find("133 samples") != std::string::npos);
    }
    CHECK_THROWS_AS(period_in_samples(0.0, SampleRate(44100)), std::invalid_argument);
    CHECK_THROWS_AS(period_in_samples(1e-6, SampleRate(44100)), std::invalid_argument);
  }

  TEST_CASE("quantise_hold") {
    const DiscreteSignal s(SampleRate(4), {1, 2, 3, 4});
    CHECK(values(quantise_hold(s, 0.5)) == std::vector<double>{1, 1, 3, 3});
    CHECK(quantise_hold(s, 0.25) == s);
    CHECK_THROWS_AS(quantise_hold(DiscreteSignal(SampleRate(4), {}), 0.5), std::invalid_argument);
  }

  TEST_CASE("quantise_average") {
    const DiscreteSignal s(SampleRate(4), {1, 3, 5, 7});
    CHECK(values(quantise_average(s, 0.5)) == std::vector<double>{2, 2, 6, 6});
    CHECK(quantise_average(s, 0.25) == s);
    CHECK(quantise_average(DiscreteSignal(SampleRate(4), {1, 3, 5}), 0.5).size() == 2);
    CHECK_THROWS_AS(quantise_average(s, 0.3), std::invalid_argument);
  }

  TEST_CASE("property: composition identity and idempotence") {
    std::mt19937_64 gen(61);
    std::normal_distribution<double> dist(0.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t d = 1 + gen() % 12;
      const double rate = static_cast<double>(d) * static_cast<double>(1 + gen() % 4000);
      std::vector<double> xs(d * (1 + gen() % 30));
      for (auto& x : xs) x = dist(gen);
      const DiscreteSignal s(SampleRate(rate), xs);
      const double period = static_cast<double>(d) / rate;

      const auto q = quantise_average(s, period);
      CHECK(q == upsample_constant(downsample_average(s, d), d));
      CHECK(quantise_average(q, period) == q);

      const auto h = quantise_hold(s, period);
      CHECK(quantise_hold(h, period) == h);
    }
  }

  TEST_CASE("hold amplitude grows with sqrt(rate); averaging amplitude is vsd/sqrt(t)") {
    const double vsd = 0.01;
    const double t = 1.0 / 441.0;
    const double hold_ratio = ensemble_block_stddev(false, vsd, 44100, t, 100) / ensemble_block_stddev(false, vsd, 11025, t, 100);
    CHECK(std::abs(hold_ratio / 2.0 - 1.0) < 0.10);

    for (double rate : {11025.0, 22050.0, 44100.0}) {
      CHECK(std::abs(ensemble_block_stddev(true, vsd, rate, t, 100) / (vsd / std::sqrt(t)) - 1.0) < 0.05);
    }
  }

  TEST_CASE("doubling the period divides averaged stddev by sqrt(2)") {
    const double vsd = 0.02;
    const double a = ensemble_block_stddev(true, vsd, 44100, 100.0 / 44100.0, 100);
    const double b = ensemble_block_stddev(true, vsd, 44100, 200.0 / 44100.0, 100);
    CHECK(std::abs(a / b / std::sqrt(2.0) - 1.0) < 0.05);
  }
}
