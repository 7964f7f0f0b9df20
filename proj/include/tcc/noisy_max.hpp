#pragma once

#include <cstdint>
#include <functional>

namespace tcc {

/// Votes per match at bracket height h: majority over 16*(h+1) oracle calls,
/// so per-match error decays with height and the union bound over the true
/// maximum's path stays below 1/3 even at oracle error exactly 1/3.
inline int bracket_votes(int height) { return 16 * (height + 1); }

/// Total oracle calls are below this for every n (32n plus bye rounding).
inline constexpr int kNoisyMaxCallConstant = 33;
inline uint64_t noisy_max_call_bound(int n) { return uint64_t(kNoisyMaxCallConstant) * uint64_t(n); }

struct NoisyMaxStats {
    uint64_t oracle_calls = 0;
    int matches = 0;
};

/// Find argmax of a hidden list via a noisy comparison oracle, by a
/// single-elimination bracket over indices 1..n (odd survivor gets a bye).
/// noisy_geq(i, j) must return I[s_i >= s_j] independently with probability
/// >= 2/3; the output is then correct with probability >= 2/3, and exact for
/// a noiseless oracle up to ties (the lower slot wins a tied majority).
int noisy_max(int n, const std::function<bool(int, int)>& noisy_geq, NoisyMaxStats* stats = nullptr);

}  // namespace tcc
