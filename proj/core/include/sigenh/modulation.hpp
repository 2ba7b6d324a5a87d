#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigenh/signal.hpp"

namespace sigenh {

enum class Scheme { kSine, kBpsk, kBfsk };

const char* to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

using Bits = std::vector<std::uint8_t>;

struct ModulationSpec {
    Scheme scheme = Scheme::kSine;
    double carrier_hz = 1000.0;
    /// Symbols per second; ignored for kSine. Must not exceed carrier_hz.
    double symbol_rate = 0.0;
    /// Cycled when the duration outlasts the payload. Required non-empty for
    /// the digital schemes.
    Bits payload_bits;
};

/// Deterministic unit-amplitude waveform, floor(duration * sample_rate)
/// samples long. BPSK maps bit 0 to the plain carrier and bit 1 to its
/// negation; BFSK keys between carrier_hz and carrier_hz + symbol_rate with
/// continuous phase.
Signal generate(const ModulationSpec& mod, std::uint32_t sample_rate, double duration_s);

/// Coherent BPSK demodulation with known carrier and symbol timing: each
/// complete symbol is correlated against the bit-0 reference carrier.
Bits demodulate_bpsk(const Signal& x, const ModulationSpec& mod);

Bits random_bits(std::size_t count, std::uint64_t seed);

}  // namespace sigenh
