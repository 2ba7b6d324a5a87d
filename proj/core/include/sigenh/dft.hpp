#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "sigenh/signal.hpp"

namespace sigenh {

/// In-place-style FFT. Radix-2 iterative for power-of-two lengths, direct
/// O(n^2) evaluation otherwise (frames in this codebase are powers of two).
std::vector<std::complex<double>> fft(std::vector<std::complex<double>> x);

std::vector<std::complex<double>> fft_real(const std::vector<double>& x);

/// |X_k|^2 of the length-N DFT, single bin, Goertzel-style direct sum.
double bin_power(const Signal& s, std::size_t bin);

/// Power at the DFT bin nearest carrier_hz, computed on the mean-removed
/// sequence (so a zero carrier maps to bin 0 and scores exactly 0).
double carrier_bin_power(const Signal& s, double carrier_hz);

/// Index of the strongest magnitude bin in [1, M/2] of the zero-padded
/// M-point transform, M = next power of two >= length. Comparing dominant
/// bins of equal-length signals is well defined.
std::size_t dominant_bin(const Signal& s);

}  // namespace sigenh
