#pragma once

#include "ratenoise/signal.hpp"

namespace ratenoise {

/// Mean of each full window of round(window_s * rate) successive samples.
/// Output has n - w + 1 samples at the input rate.
DiscreteSignal moving_average(const DiscreteSignal& s, double window_s);

/// Impulse-invariant one-pole low-pass with unity DC gain:
///   y[k] = a*y[k-1] + (1-a)*x[k],  a = exp(-2*pi*cutoff/rate),  y[-1] = 0.
/// Requires 0 < cutoff < rate/2.
DiscreteSignal first_order_lowpass(const DiscreteSignal& s, double cutoff_hz);

/// Chamberlin state-variable filter, low-pass tap.
///
/// Per sample, with f1 = 2*sin(pi*resonance/rate) and all states starting at 0:
///   low  += f1*band
///   high  = x - low - band/q
///   band += f1*high
/// The discretisation is only stable for resonance < rate/6, which is enforced,
/// as is q >= 0.5.
DiscreteSignal state_variable_lowpass(const DiscreteSignal& s, double resonance_hz, double q);

/// amplitude * sin(2*pi*freq*k/rate + phase) for round(duration_s * rate) samples.
DiscreteSignal sine_oscillator(double freq_hz, double amplitude, SampleRate rate, double duration_s,
                               double phase = 0.0);

/// Running Riemann sum: out[k] = (1/rate) * sum_{j<=k} in[j]. Unit V*s.
DiscreteSignal integrate(const DiscreteSignal& s);

}  // namespace ratenoise
