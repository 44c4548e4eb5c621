#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ratenoise/noise.hpp"
#include "ratenoise/random.hpp"
#include "ratenoise/signal.hpp"

namespace ratenoise {

/// Complex spectrum in V*s with bin k at frequency k * bin_width.
struct Spectrum {
  SampleRate rate;
  std::vector<std::complex<double>> coefficients;
  double bin_width;

  double frequency(std::size_t k) const { return static_cast<double>(k) * bin_width; }
};

/// Largest length transformed by direct summation; longer signals go through
/// the fast transform.
inline constexpr std::size_t kDirectDftLimit = 4096;

/// Spectrum normalised by the sampling period with a positive exponent:
///
///   X_k = (1/r) * sum_{j=0}^{n-1} x_j * exp(+2*pi*i*j*k/n)
///
/// so that spectra of equal-duration signals rendered at different rates are
/// directly comparable. For i.i.d. samples of variance y^2 every coefficient
/// has variance n*y^2/r^2.
Spectrum dft(const DiscreteSignal& s);

/// The same transform evaluated term by term, O(n^2). Exact conjugate symmetry
/// for real input: coefficient n-k is bitwise the conjugate of coefficient k.
Spectrum dft_direct(const DiscreteSignal& s);

struct OneSidedSpectrum {
  double bin_width;
  /// |X_k| for k = 0 .. floor(n/2).
  std::vector<double> magnitudes;

  double frequency(std::size_t k) const { return static_cast<double>(k) * bin_width; }
};

OneSidedSpectrum magnitude_spectrum(const DiscreteSignal& s);

struct AutocovarianceSeq {
  SampleRate rate;
  /// values[d] for lags d = 0 .. max_lag, V^2.
  std::vector<double> values;
};

/// Biased estimator values[d] = (1/n) * sum_{k=0}^{n-1-d} s[k]*s[k+d].
/// No mean is removed: the processes of interest have zero mean.
AutocovarianceSeq autocovariance(const DiscreteSignal& s, std::size_t max_lag);

/// O(n * max_lag) evaluation of the same estimator.
AutocovarianceSeq autocovariance_direct(const DiscreteSignal& s, std::size_t max_lag);

/// Noise power spectral density: the spectrum of the autocovariance.
///
/// The estimate for lags 0..max_lag is mirrored to negative lags, giving a
/// real, even sequence of 2*max_lag+1 values that is transformed with dft().
/// For white noise the result is flat at Var(x)/r = vsd^2.
Spectrum noise_spectral_density(const DiscreteSignal& s, std::size_t max_lag);
/// As above with max_lag = n/10.
Spectrum noise_spectral_density(const DiscreteSignal& s);

/// Mean of the real part of density bins strictly inside (lo_hz, hi_hz),
/// one-sided (bins up to floor(N/2)).
double mean_density(const Spectrum& density, double lo_hz, double hi_hz);

struct OctaveBand {
  double lo_hz;
  double hi_hz;
  std::size_t bins;
  double mean;
};

/// Averages the one-sided real density over octave bands of bins [b, 2b),
/// starting at b = min_bins so that every band pools at least min_bins
/// values. A short trailing band is merged into its predecessor. DC is never
/// included.
std::vector<OctaveBand> octave_band_means(const Spectrum& density, std::size_t min_bins = 128);

/// A rate-aware white noise source for ensemble estimates.
struct NoiseConfig {
  NoiseSpec spec;
  SampleRate rate;
  double duration_s;
  Seed master;
  Distribution dist = Distribution::Uniform;
};

/// Per-bin total variance Var(Re X_k) + Var(Im X_k) over `trials` renders
/// seeded with split(master, i). One value per bin k = 0 .. n-1.
std::vector<double> ensemble_bin_variances(const NoiseConfig& gen, std::size_t trials);

/// sqrt(Var(Re X_k) + Var(Im X_k)) at one bin over `trials` renders. For
/// i.i.d. input this approaches sqrt(l/r) * y = sqrt(l) * vsd.
double ensemble_spectrum_stddev(const NoiseConfig& gen, std::size_t trials, std::size_t bin);

}  // namespace ratenoise
