#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dhb {

using Complex = std::complex<double>;

bool is_power_of_two(std::size_t n);

/// In-place radix-2 FFT, X_k = sum_j x_j e^{-2 pi i jk/n}. Size must be a power of two.
void fft_inplace(std::span<Complex> a);

/// Inverse transform including the 1/n factor.
void ifft_inplace(std::span<Complex> a);

std::vector<Complex> fft(std::vector<Complex> a);
std::vector<Complex> ifft(std::vector<Complex> a);

}  // namespace dhb
