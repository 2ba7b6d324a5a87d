#pragma once

#include <cstdint>
#include <random>

namespace sigenh {

/// One SplitMix64 step: advances `state` and returns the next output word.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic child seed for substream `stream` of a master seed. Every
/// stochastic operation takes an explicit seed derived this way, so batch
/// experiments are reproducible regardless of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// mt19937_64 seeded through SplitMix64 so that nearby seeds do not share
/// low-entropy state.
std::mt19937_64 make_rng(std::uint64_t seed);

}  // namespace sigenh
