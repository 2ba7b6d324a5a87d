#include "sigenh/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sigenh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<std::complex<double>> dft_direct(const std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t t = 0; t < n; ++t) {
            const double ang = -kTwoPi * static_cast<double>(k) * static_cast<double>(t) /
                               static_cast<double>(n);
            acc += x[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> fft(std::vector<std::complex<double>> x) {
    const std::size_t n = x.size();
    if (n <= 1) return x;
    if (!is_pow2(n)) return dft_direct(x);

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -kTwoPi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = x[i + k];
                const std::complex<double> v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    return x;
}

std::vector<std::complex<double>> fft_real(const std::vector<double>& x) {
    std::vector<std::complex<double>> cx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) cx[i] = std::complex<double>(x[i], 0.0);
    return fft(std::move(cx));
}

double bin_power(const Signal& s, std::size_t bin) {
    require_valid(s, "bin_power");
    const std::size_t n = s.samples.size();
    if (bin >= n) throw std::invalid_argument("bin_power: bin out of range");
    const double w = kTwoPi * static_cast<double>(bin) / static_cast<double>(n);
    double re = 0.0, im = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double ang = w * static_cast<double>(t);
        re += s.samples[t] * std::cos(ang);
        im -= s.samples[t] * std::sin(ang);
    }
    return re * re + im * im;
}

double carrier_bin_power(const Signal& s, double carrier_hz) {
    require_valid(s, "carrier_bin_power");
    if (carrier_hz < 0.0 || carrier_hz > s.sample_rate / 2.0) {
        throw std::invalid_argument("carrier_bin_power: carrier outside [0, rate/2]");
    }
    const std::size_t n = s.samples.size();
    const auto bin = static_cast<std::size_t>(
        std::llround(carrier_hz / s.sample_rate * static_cast<double>(n)));
    return bin_power(demeaned(s), std::min(bin, n - 1));
}

std::size_t dominant_bin(const Signal& s) {
    require_valid(s, "dominant_bin");
    const std::size_t m = next_pow2(s.samples.size());
    std::vector<std::complex<double>> padded(m, std::complex<double>(0.0, 0.0));
    for (std::size_t i = 0; i < s.samples.size(); ++i) padded[i] = s.samples[i];
    const auto spec = fft(std::move(padded));
    std::size_t best = 1;
    double best_mag = -1.0;
    for (std::size_t k = 1; k <= m / 2; ++k) {
        const double mag = std::norm(spec[k]);
        if (mag > best_mag) {
            best_mag = mag;
            best = k;
        }
    }
    return best;
}

}  // namespace sigenh
