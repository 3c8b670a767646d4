#include "sumprod/dft.hpp"

#include <cmath>
#include <numbers>

namespace sumprod::dft {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void fft_pow2(std::vector<cd>& a, bool inverse) {
    const size_t n = a.size();
    if (n < 2) return;
    // bit-reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double sign = inverse ? -1.0 : 1.0;
    std::vector<cd> tw(n / 2);
    for (size_t j = 0; j < n / 2; ++j)
        tw[j] = std::polar(1.0, sign * kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    for (size_t len = 2; len <= n; len <<= 1) {
        const size_t stride = n / len;
        for (size_t i = 0; i < n; i += len) {
            for (size_t j = 0; j < len / 2; ++j) {
                cd u = a[i + j];
                cd v = a[i + j + len / 2] * tw[j * stride];
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        for (auto& x : a) x /= static_cast<double>(n);
    }
}

std::vector<cd> naive_dft(const std::vector<cd>& x) {
    const size_t n = x.size();
    std::vector<cd> out(n, cd(0, 0));
    for (size_t k = 0; k < n; ++k) {
        cd s(0, 0);
        for (size_t j = 0; j < n; ++j) {
            uint64_t e = j * k % n;
            s += x[j] * std::polar(1.0, kTwoPi * static_cast<double>(e) / static_cast<double>(n));
        }
        out[k] = s;
    }
    return out;
}

std::vector<cd> bluestein_dft(const std::vector<cd>& x) {
    const size_t n = x.size();
    if (n == 0) return {};
    if (n == 1) return x;

    // chirp beta_t = e(pi*i*t^2/n), period 2n in the exponent
    std::vector<cd> beta(n);
    for (size_t t = 0; t < n; ++t) {
        uint64_t e = static_cast<uint64_t>(t) * t % (2 * n);
        beta[t] = std::polar(1.0, std::numbers::pi * static_cast<double>(e) / static_cast<double>(n));
    }

    size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    // X_k = beta_k * sum_j (x_j beta_j) conj(beta_{k-j})
    std::vector<cd> u(m, cd(0, 0)), v(m, cd(0, 0));
    for (size_t j = 0; j < n; ++j) u[j] = x[j] * beta[j];
    for (size_t t = 0; t < n; ++t) {
        v[t] = std::conj(beta[t]);
        if (t > 0) v[m - t] = std::conj(beta[t]);
    }
    fft_pow2(u, false);
    fft_pow2(v, false);
    for (size_t i = 0; i < m; ++i) u[i] *= v[i];
    fft_pow2(u, true);

    std::vector<cd> out(n);
    for (size_t k = 0; k < n; ++k) out[k] = beta[k] * u[k];
    return out;
}

}  // namespace sumprod::dft
