#pragma once

#include <cstdint>
#include <functional>

#include "tcc/rng.hpp"
#include "tcc/tournament.hpp"

namespace tcc {

/// One Delayer reply to a queried pair: either a direction or a deferral
/// (the Prover then directs the edge and the Delayer scores a point).
struct DelayerReply {
    bool defer = true;
    int from = 0, to = 0;

    static DelayerReply deferred() { return {}; }
    static DelayerReply directed(int from, int to) { return {false, from, to}; }
};

/// A Delayer strategy: called with the queried pair (i < j) and the partial
/// orientation so far. May keep internal state.
using DelayerFn = std::function<DelayerReply(int i, int j, const PartialOrientation& rho)>;

struct GameResult {
    int delayer_score = 0;
    int64_t queries = 0;
    int prover_output = 0;
    bool valid = false;  ///< output is a king in every completion of the final rho
};

/// Play the rank game with the pivot-recursion Prover: pick the lowest
/// vertex v of the live set, query all its unset edges inside the set
/// (deferred edges are directed out of v), then recurse on v's
/// in-neighbourhood. The final pivot is a king in every completion.
GameResult play_rank_game_alg3(int n, const DelayerFn& delayer);

/// Defer the first k queries, then answer toward the Prover's apparent pivot
/// (the common endpoint of consecutive queries; lower endpoint if ambiguous).
DelayerFn delayer_defer_first(int k);

/// Seeded mix: defer with probability 1/3, otherwise a uniform direction.
DelayerFn delayer_random(uint64_t seed);

/// Exact minimax value of the game (Delayer maximizes deferrals, Prover
/// minimizes; the game ends as soon as some vertex is a king in every
/// completion). Supported for n <= 4 only.
int exact_game_value(int n);

}  // namespace tcc
