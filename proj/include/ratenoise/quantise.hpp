#pragma once

#include <cstddef>

#include "ratenoise/signal.hpp"

namespace ratenoise {

/// Quantisation period in samples, d = period_s * rate. Throws unless d is a
/// positive integer; the message names the nearest periods that would be valid.
std::size_t period_in_samples(double period_s, SampleRate rate);

/// Sample-and-hold: out[k] = in[k - (k mod d)]. Same length and rate.
///
/// On rate-aware noise the held amplitude grows with sqrt(rate), since each
/// held value is a single sample.
DiscreteSignal quantise_hold(const DiscreteSignal& s, double period_s);

/// Holds the mean of each aligned block of d samples. Equivalent to
/// upsample_constant(downsample_average(s, d), d); a trailing partial block is
/// dropped. On rate-aware noise the output stddev is vsd / sqrt(period_s),
/// independent of the rate.
///
/// Blocks are aligned to sample 0. A real-time variant would have to delay the
/// output by one period; this offline form does not.
DiscreteSignal quantise_average(const DiscreteSignal& s, double period_s);

}  // namespace ratenoise
