#include "sigenh/rng.hpp"

namespace sigenh {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed;
    const std::uint64_t a = splitmix64(state);
    state = a ^ (stream * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull);
    return splitmix64(state);
}

std::mt19937_64 make_rng(std::uint64_t seed) {
    std::uint64_t state = seed;
    const std::uint64_t s0 = splitmix64(state);
    const std::uint64_t s1 = splitmix64(state);
    std::seed_seq seq{static_cast<std::uint32_t>(s0), static_cast<std::uint32_t>(s0 >> 32),
                      static_cast<std::uint32_t>(s1), static_cast<std::uint32_t>(s1 >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace sigenh
