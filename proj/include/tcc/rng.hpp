#pragma once

#include <cstdint>

// Seeded randomness helpers. Everything that consumes randomness in this
// library takes an explicit seed or generator; there is no ambient RNG.
// splitmix64 doubles as a counter-mode generator for public randomness:
// any party can compute word k of a stream without drawing words 0..k-1.

namespace tcc {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Mix a seed with salts to derive independent sub-streams.
inline uint64_t derive_seed(uint64_t seed, uint64_t salt) {
    return splitmix64(seed ^ (0x517cc1b727220a95ULL * (salt + 1)));
}
inline uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b) {
    return derive_seed(derive_seed(seed, a), b);
}
inline uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
    return derive_seed(derive_seed(seed, a, b), c);
}

/// Small deterministic generator (splitmix-based). Used instead of
/// std::mt19937_64 + distributions so results are identical across
/// standard-library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    bool next_bit() { return (next() >> 63) != 0; }

    /// Uniform integer in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound) {
        // rejection sampling on the top chunk keeps this exactly uniform
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Bernoulli(num/den).
    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

private:
    uint64_t state_;
};

}  // namespace tcc
