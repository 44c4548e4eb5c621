#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ratenoise::detail {

using cplx = std::complex<double>;

/// In-place iterative radix-2 transform, X_k = sum_j x_j exp(sign*2*pi*i*j*k/n).
/// `a.size()` must be a power of two. Unnormalised.
void fft_pow2(std::vector<cplx>& a, int sign);

/// Same transform for any length: radix-2 when possible, Bluestein otherwise.
std::vector<cplx> fft_any(std::span<const cplx> x, int sign);

std::size_t next_pow2(std::size_t n);

}  // namespace ratenoise::detail
