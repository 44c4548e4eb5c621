#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ratenoise/filters.hpp"
#include "ratenoise/impulse.hpp"
#include "ratenoise/noise.hpp"

using namespace ratenoise;

namespace {

DiscreteSignal noise_plus_dc(double vsd, double dc, double rate, double dur, Seed seed) {
  auto x = white_noise(NoiseSpec::from_vsd(vsd), SampleRate(rate), dur, seed).release();
  for (auto& v : x) v += dc;
  return {SampleRate(rate), std::move(x)};
}

double gap_variance(const DiscreteSignal& impulses) {
  const auto gaps = impulse_gaps(impulses);
  return gaps.size() >= 2 ? oracle::moments(gaps).variance : 0.0;
}

}  // namespace

TEST_SUITE("impulse") {
  TEST_CASE("threshold_clicks") {
    const SampleRate r(44100);
    const DiscreteSignal at_edge(r, std::vector<double>(100, 0.5));
    CHECK(count_nonzero(threshold_clicks(at_edge, 100.0, 0.5)) == 0);
    const DiscreteSignal zeros(r, std::vector<double>(100, 0.0));
    CHECK(count_nonzero(threshold_clicks(zeros, 100.0, 0.5)) == 100);
    CHECK_THROWS_AS(threshold_clicks(zeros, 44100.0, 1.0), std::invalid_argument);

    const auto noise = white_noise_legacy(1.0, r, 10.0, Seed{12});
    const auto clicks = threshold_clicks(noise, 100.0, 1.0);
    for (double v : clicks.samples()) REQUIRE((v == 0.0 || v == 1.0));
    CHECK(std::abs(static_cast<double>(count_nonzero(clicks)) - 1000.0) < 3.0 * std::sqrt(1000.0));
  }

  TEST_CASE("rate-aware click threshold scales as 1/sqrt(rate)") {
    const double vsd = 0.005;
    const double t11 = rate_aware_click_threshold(vsd, 100.0, SampleRate(11025));
    const double t44 = rate_aware_click_threshold(vsd, 100.0, SampleRate(44100));
    CHECK(t11 / t44 == doctest::Approx(2.0).epsilon(1e-12));
    // With the amplitude-derived threshold the click rate stays on target.
    for (double rate : {11025.0, 44100.0}) {
      const auto noise = white_noise(NoiseSpec::from_vsd(vsd), SampleRate(rate), 10.0, Seed{14});
      const double amplitude = std::sqrt(3.0) * vsd * std::sqrt(rate);
      const auto clicks = threshold_clicks(noise, 100.0, amplitude);
      CHECK(std::abs(static_cast<double>(count_nonzero(clicks)) - 1000.0) < 3.0 * std::sqrt(1000.0));
    }
  }

  TEST_CASE("delta_sigma basics") {
    const SampleRate r(44100);
    const DiscreteSignal zeros(r, std::vector<double>(1000, 0.0));
    CHECK(count_nonzero(delta_sigma(zeros, 0.1)) == 0);
    CHECK_THROWS_AS(delta_sigma(zeros, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(delta_sigma(zeros, -1.0), std::invalid_argument);

    // mu*dur/y impulses up to the one still building in the accumulator.
    for (double dur : {10.0, 100.0}) {
      const DiscreteSignal one(r, std::vector<double>(static_cast<std::size_t>(dur * r.hz()), 1.0));
      const auto y = delta_sigma(one, 0.1);
      CHECK(std::abs(static_cast<double>(count_nonzero(y)) - dur / 0.1) <= 1.0);
      for (double v : y.samples()) REQUIRE((v == 0.0 || v == r.hz() * 0.1));
    }
  }

  TEST_CASE("delta_sigma replays the documented recursion bit for bit") {
    const auto x = noise_plus_dc(0.3, 1.0, 11025, 2.0, Seed{3});
    const double y = 0.05;
    const auto run = delta_sigma_run(x, y);
    double acc = 0.0;
    double prev = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      acc += (x[k] - prev) / x.rate().hz();
      const double out = acc > y ? x.rate().hz() * y : 0.0;
      REQUIRE(run.output[k] == out);
      prev = out;
    }
    CHECK(run.final_state.accumulator == acc);
    CHECK(run.final_state.previous_output == prev);
  }

  TEST_CASE("area conservation") {
    for (double rate : {11025.0, 44100.0}) {
      const auto x = noise_plus_dc(0.2, 0.8, rate, 3.0, Seed{8});
      const auto run = delta_sigma_run(x, 0.02);
      long double in_area = 0.0L;
      long double out_area = 0.0L;
      for (std::size_t k = 0; k < x.size(); ++k) {
        in_area += x[k];
        out_area += run.output[k];
      }
      in_area /= rate;
      out_area /= rate;
      // The last impulse has not been fed back yet.
      const long double residual = in_area - out_area + run.final_state.previous_output / rate;
      CHECK(std::abs(static_cast<double>(residual) - run.final_state.accumulator) < 1e-9);
    }
  }

  TEST_CASE("accumulator bound for non-negative input") {
    const SampleRate r(44100);
    std::vector<double> ramp(44100);
    for (std::size_t k = 0; k < ramp.size(); ++k) ramp[k] = 3.0 * static_cast<double>(k % 500) / 500.0;
    const DiscreteSignal x(r, ramp);
    const double y = 0.01;
    const auto run = delta_sigma_run(x, y);
    CHECK(std::abs(run.final_state.accumulator) <= y + 3.0 / r.hz());
  }

  TEST_CASE("no adjacent impulses when per-sample increments stay below half the threshold") {
    const auto x = noise_plus_dc(0.05, 2.0, 44100, 2.0, Seed{6});
    double peak = 0.0;
    for (double v : x.samples()) peak = std::max(peak, std::abs(v));
    const double y = 2.5 * peak / x.rate().hz();
    const auto out = delta_sigma(x, y);
    REQUIRE(count_nonzero(out) > 10);
    for (std::size_t k = 1; k < out.size(); ++k) REQUIRE_FALSE((out[k] != 0.0 && out[k - 1] != 0.0));

    // Between y/2 and y, back-to-back impulses do occur.
    const DiscreteSignal steady(SampleRate(100), std::vector<double>(100, 90.0));
    const auto burst = delta_sigma(steady, 1.0);
    bool adjacent = false;
    for (std::size_t k = 1; k < burst.size(); ++k) adjacent = adjacent || (burst[k] != 0.0 && burst[k - 1] != 0.0);
    CHECK(adjacent);
  }

  TEST_CASE("smoothed impulses track the smoothed input") {
    const SampleRate r(44100);
    const DiscreteSignal dc(r, std::vector<double>(44100, 1.0));
    const double fc = r.hz() / 1000.0;
    const auto smooth_in = first_order_lowpass(dc, fc);
    const auto smooth_out = first_order_lowpass(delta_sigma(dc, 0.001), fc);
    long double diff = 0.0L;
    for (std::size_t k = 0; k < dc.size(); ++k) diff += std::pow(smooth_out[k] - smooth_in[k], 2);
    const double rms_diff = std::sqrt(static_cast<double>(diff / dc.size()));
    CHECK(rms_diff < 0.15 * rms(smooth_in));
  }

  TEST_CASE("more noise never makes the impulse train more regular") {
    double quiet = 0.0;
    double loud = 0.0;
    for (std::uint64_t i = 0; i < 20; ++i) {
      quiet += gap_variance(delta_sigma(noise_plus_dc(0.05, 1.0, 11025, 10.0, split(Seed{90}, i)), 0.1));
      loud += gap_variance(delta_sigma(noise_plus_dc(0.3, 1.0, 11025, 10.0, split(Seed{90}, i)), 0.1));
    }
    CHECK(loud >= quiet);
  }

  TEST_CASE("impulse_gaps") {
    const DiscreteSignal s(SampleRate(10), {0, 5, 0, 0, 5, 5, 0, 0, 0, 5});
    CHECK(impulse_gaps(s) == std::vector<double>{0.3, 0.1, 0.4});
  }
}
