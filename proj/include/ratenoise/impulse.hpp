#pragma once

#include "ratenoise/signal.hpp"

namespace ratenoise {

/// Naive click generator: 1 V wherever |noise[k]| <= noise_amplitude * target/rate.
///
/// For uniform noise on [-noise_amplitude, noise_amplitude] this fires with
/// probability target/rate per sample. The threshold depends on the rate, so
/// the same physical parameters give a different click density once the noise
/// amplitude itself follows the rate.
DiscreteSignal threshold_clicks(const DiscreteSignal& noise, double target_hz, double noise_amplitude);

/// Comparator threshold that keeps threshold_clicks at `target_hz` when fed
/// uniform rate-aware noise of spectral density `vsd`. Scales as 1/sqrt(rate).
double rate_aware_click_threshold(double vsd, double target_hz, SampleRate rate);

struct DeltaSigmaState {
  /// Integrated input minus fed-back impulses, V*s.
  double accumulator = 0.0;
  /// Last emitted sample, either 0 or rate*threshold. Not yet subtracted.
  double previous_output = 0.0;
};

struct DeltaSigmaResult {
  DiscreteSignal output;
  DeltaSigmaState final_state;
};

/// First-order delta-sigma modulator producing single-sample impulses of
/// height rate*threshold, i.e. area exactly `threshold_vs`.
///
/// Per sample: acc += (in[k] - prev_out) / rate; out[k] = acc > threshold ?
/// rate*threshold : 0; prev_out = out[k]. The feedback is delayed by one
/// sample, so after the last sample one impulse may still be pending in
/// final_state.previous_output.
DeltaSigmaResult delta_sigma_run(const DiscreteSignal& input, double threshold_vs);

DiscreteSignal delta_sigma(const DiscreteSignal& input, double threshold_vs);

/// Gaps between successive nonzero samples, in seconds.
std::vector<double> impulse_gaps(const DiscreteSignal& impulses);

std::size_t count_nonzero(const DiscreteSignal& s);

}  // namespace ratenoise
