#include "sigenh/modulation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sigenh/rng.hpp"

namespace sigenh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_spec(const ModulationSpec& mod, std::uint32_t sample_rate) {
    if (sample_rate == 0) throw std::invalid_argument("generate: sample_rate must be > 0");
    const double nyquist = sample_rate / 2.0;
    if (mod.carrier_hz < 0.0) throw std::invalid_argument("generate: carrier_hz must be >= 0");
    if (mod.carrier_hz >= nyquist) {
        throw std::invalid_argument("generate: carrier_hz must stay below sample_rate/2");
    }
    if (mod.scheme != Scheme::kSine) {
        if (mod.symbol_rate <= 0.0) {
            throw std::invalid_argument("generate: digital schemes need symbol_rate > 0");
        }
        if (mod.symbol_rate > mod.carrier_hz) {
            throw std::invalid_argument("generate: symbol_rate must not exceed carrier_hz");
        }
        if (mod.payload_bits.empty()) {
            throw std::invalid_argument("generate: digital schemes need payload bits");
        }
    }
    if (mod.scheme == Scheme::kBfsk && mod.carrier_hz + mod.symbol_rate >= nyquist) {
        throw std::invalid_argument("generate: BFSK mark tone exceeds sample_rate/2");
    }
}

std::size_t symbol_of(std::size_t n, double symbol_rate, std::uint32_t sample_rate) {
    return static_cast<std::size_t>(
        std::floor(static_cast<double>(n) * symbol_rate / sample_rate));
}

}  // namespace

const char* to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::kSine: return "sine";
        case Scheme::kBpsk: return "bpsk";
        case Scheme::kBfsk: return "bfsk";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "sine") return Scheme::kSine;
    if (name == "bpsk") return Scheme::kBpsk;
    if (name == "bfsk") return Scheme::kBfsk;
    throw std::invalid_argument("unknown modulation scheme: " + name);
}

Signal generate(const ModulationSpec& mod, std::uint32_t sample_rate, double duration_s) {
    check_spec(mod, sample_rate);
    if (!(duration_s > 0.0)) throw std::invalid_argument("generate: duration must be > 0");
    // floor(duration * rate), snapping results that sit within 1e-9 relative
    // of an integer so durations written as count/rate stay exact.
    const double raw = duration_s * static_cast<double>(sample_rate);
    const double rounded = std::round(raw);
    const double snapped =
        std::abs(raw - rounded) < 1e-9 * std::max(1.0, raw) ? rounded : std::floor(raw);
    const auto count = static_cast<std::size_t>(snapped);
    if (count == 0) {
        throw std::invalid_argument("generate: duration shorter than one sample");
    }

    Signal s;
    s.sample_rate = sample_rate;
    s.samples.resize(count);

    switch (mod.scheme) {
        case Scheme::kSine: {
            const double w = kTwoPi * mod.carrier_hz / sample_rate;
            for (std::size_t n = 0; n < count; ++n) {
                s.samples[n] = std::sin(w * static_cast<double>(n));
            }
            break;
        }
        case Scheme::kBpsk: {
            const double w = kTwoPi * mod.carrier_hz / sample_rate;
            for (std::size_t n = 0; n < count; ++n) {
                const std::size_t k = symbol_of(n, mod.symbol_rate, sample_rate);
                const bool one = mod.payload_bits[k % mod.payload_bits.size()] != 0;
                const double c = std::sin(w * static_cast<double>(n));
                s.samples[n] = one ? -c : c;
            }
            break;
        }
        case Scheme::kBfsk: {
            // Continuous-phase keying between carrier (bit 0) and
            // carrier + symbol_rate (bit 1).
            double phase = 0.0;
            for (std::size_t n = 0; n < count; ++n) {
                s.samples[n] = std::sin(phase);
                const std::size_t k = symbol_of(n, mod.symbol_rate, sample_rate);
                const bool one = mod.payload_bits[k % mod.payload_bits.size()] != 0;
                const double f = mod.carrier_hz + (one ? mod.symbol_rate : 0.0);
                phase += kTwoPi * f / sample_rate;
            }
            break;
        }
    }
    return s;
}

Bits demodulate_bpsk(const Signal& x, const ModulationSpec& mod) {
    require_valid(x, "demodulate_bpsk");
    if (mod.scheme != Scheme::kBpsk) {
        throw std::invalid_argument("demodulate_bpsk: spec is not BPSK");
    }
    if (mod.symbol_rate <= 0.0) {
        throw std::invalid_argument("demodulate_bpsk: symbol_rate must be > 0");
    }
    const std::size_t n_samples = x.samples.size();
    const auto n_symbols = static_cast<std::size_t>(std::floor(
        static_cast<double>(n_samples) * mod.symbol_rate / x.sample_rate));
    if (n_symbols == 0) {
        throw std::invalid_argument("demodulate_bpsk: signal shorter than one symbol");
    }

    const double w = kTwoPi * mod.carrier_hz / x.sample_rate;
    std::vector<double> corr(n_symbols, 0.0);
    for (std::size_t n = 0; n < n_samples; ++n) {
        const std::size_t k = symbol_of(n, mod.symbol_rate, x.sample_rate);
        if (k >= n_symbols) break;
        corr[k] += x.samples[n] * std::sin(w * static_cast<double>(n));
    }

    Bits bits(n_symbols);
    for (std::size_t k = 0; k < n_symbols; ++k) bits[k] = corr[k] < 0.0 ? 1 : 0;
    return bits;
}

Bits random_bits(std::size_t count, std::uint64_t seed) {
    auto rng = make_rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    Bits bits(count);
    for (auto& b : bits) b = static_cast<std::uint8_t>(coin(rng));
    return bits;
}

}  // namespace sigenh
