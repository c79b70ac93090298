#include "dhb/fft.hpp"

#include <numbers>
#include <stdexcept>

namespace dhb {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

void transform(std::span<Complex> a, double sign) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("fft: size must be a power of two");
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / double(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                // polar per butterfly keeps twiddles at full precision
                const Complex w = std::polar(1.0, ang * double(k));
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

}  // namespace

void fft_inplace(std::span<Complex> a) { transform(a, -1.0); }

void ifft_inplace(std::span<Complex> a) {
    transform(a, +1.0);
    const double inv = 1.0 / double(a.size());
    for (auto& x : a) x *= inv;
}

std::vector<Complex> fft(std::vector<Complex> a) {
    fft_inplace(a);
    return a;
}

std::vector<Complex> ifft(std::vector<Complex> a) {
    ifft_inplace(a);
    return a;
}

}  // namespace dhb
