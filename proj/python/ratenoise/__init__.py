"""Sampling-rate-aware white noise.

Signals are 1-D float64 numpy arrays; every function that processes one also
takes the sampling rate in Hz.
"""

from ._core import (
    ComparabilityReport,
    DeltaSigma,
    IoError,
    LegacySource,
    Lowpass,
    MetricResult,
    Noise,
    NoiseSpec,
    Panpipe,
    QuantiseAverage,
    RateAwareSource,
    StateVariable,
    autocovariance,
    check_comparability,
    delta_sigma,
    describe,
    dft,
    downsample_average,
    first_order_lowpass,
    integrate,
    moving_average,
    noise_spectral_density,
    quantise_average,
    quantise_hold,
    read_wav,
    render,
    sine,
    split_seed,
    state_variable_lowpass,
    upsample_constant,
    white_noise,
    white_noise_legacy,
    write_wav,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
