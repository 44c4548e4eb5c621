#pragma once

#include <compare>

namespace ratenoise {

/// A double tagged with its physical unit. Distinct tags never convert into
/// each other, so a sampling rate cannot be passed where a filter frequency
/// is expected.
template <class Tag>
struct Quantity {
  double value = 0.0;

  constexpr Quantity() = default;
  constexpr explicit Quantity(double v) : value(v) {}

  constexpr auto operator<=>(const Quantity&) const = default;
};

struct VoltTag {};
struct SecondTag {};
struct HertzTag {};
struct VoltSecondTag {};

using Volts = Quantity<VoltTag>;
using Seconds = Quantity<SecondTag>;
/// A physical frequency (cut-off, resonance, oscillator pitch). Not a
/// sampling rate.
using Hertz = Quantity<HertzTag>;
using VoltSeconds = Quantity<VoltSecondTag>;

}  // namespace ratenoise
