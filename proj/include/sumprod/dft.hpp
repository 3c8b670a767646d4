#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace sumprod::dft {

using cd = std::complex<double>;

// In-place iterative radix-2 FFT; n must be a power of two.
// Forward uses e(+2*pi*i*jk/n); inverse divides by n.
void fft_pow2(std::vector<cd>& a, bool inverse);

// DFT of arbitrary length n via the Bluestein chirp reduction to a
// power-of-two convolution: X_k = sum_j x_j e(+2*pi*i*jk/n).
std::vector<cd> bluestein_dft(const std::vector<cd>& x);

// Naive O(n^2) DFT with the same convention; test oracle and small-n path.
std::vector<cd> naive_dft(const std::vector<cd>& x);

}  // namespace sumprod::dft
