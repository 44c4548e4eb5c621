#include "fft.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace ratenoise::detail {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_pow2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // Twiddles are taken from one table of the full length so every stage uses
  // directly evaluated roots rather than repeated products.
  std::vector<cplx> roots(n / 2);
  for (std::size_t m = 0; m < n / 2; ++m) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    roots[m] = {std::cos(angle), std::sin(angle)};
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx u = a[start + k];
        const cplx v = a[start + k + half] * roots[k * stride];
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
}

std::vector<cplx> fft_any(std::span<const cplx> x, int sign) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  if ((n & (n - 1)) == 0) {
    std::vector<cplx> a(x.begin(), x.end());
    fft_pow2(a, sign);
    return a;
  }

  // Bluestein: jk = (j^2 + k^2 - (k-j)^2) / 2 turns the transform into a
  // convolution with a chirp, evaluated with power-of-two transforms.
  const std::size_t m = next_pow2(2 * n - 1);
  const std::size_t two_n = 2 * n;
  std::vector<cplx> chirp(n);
  std::size_t sq = 0;  // j^2 mod 2n; j^2 - (j-1)^2 = 2j - 1
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) sq = (sq + 2 * j - 1) % two_n;
    const double angle = sign * std::numbers::pi * static_cast<double>(sq) / static_cast<double>(n);
    chirp[j] = {std::cos(angle), std::sin(angle)};
  }

  std::vector<cplx> a(m), b(m);
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);

  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, +1);

  std::vector<cplx> out(n);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * inv_m * chirp[k];
  return out;
}

}  // namespace ratenoise::detail
