#include "tcc/rank_game.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

namespace tcc {

GameResult play_rank_game_alg3(int n, const DelayerFn& delayer) {
    PartialOrientation rho(n);
    GameResult result;
    std::vector<int> live(size_t(n), 0);
    for (int v = 1; v <= n; ++v) live[size_t(v - 1)] = v;

    int pivot = 0;
    while (!live.empty()) {
        pivot = live.front();  // lowest label
        for (int u : live) {
            if (u == pivot || rho.is_set(pivot, u)) continue;
            ++result.queries;
            DelayerReply reply = delayer(std::min(pivot, u), std::max(pivot, u), rho);
            if (reply.defer) {
                ++result.delayer_score;
                rho.set_direction(pivot, u);  // Prover directs the edge out of the pivot
            } else {
                if (std::min(reply.from, reply.to) != std::min(pivot, u) ||
                    std::max(reply.from, reply.to) != std::max(pivot, u))
                    throw std::invalid_argument("delayer answered a different pair");
                rho.set_direction(reply.from, reply.to);
            }
        }
        std::vector<int> next;
        for (int u : live)
            if (u != pivot && rho.points(u, pivot)) next.push_back(u);
        live = std::move(next);
    }
    result.prover_output = pivot;
    result.valid = king_in_all_completions(rho, pivot);
    return result;
}

DelayerFn delayer_defer_first(int k) {
    struct State {
        int remaining;
        int prev_i = 0, prev_j = 0;
    };
    auto state = std::make_shared<State>(State{k});
    return [state](int i, int j, const PartialOrientation&) {
        int pivot;  // the endpoint shared with the previous query, else the lower one
        if (state->prev_i == i || state->prev_j == i)
            pivot = i;
        else if (state->prev_i == j || state->prev_j == j)
            pivot = j;
        else
            pivot = i;
        state->prev_i = i;
        state->prev_j = j;
        if (state->remaining > 0) {
            --state->remaining;
            return DelayerReply::deferred();
        }
        return DelayerReply::directed(pivot == i ? j : i, pivot);  // toward the pivot
    };
}

DelayerFn delayer_random(uint64_t seed) {
    auto rng = std::make_shared<Rng>(derive_seed(seed, 0x64656cULL));
    return [rng](int i, int j, const PartialOrientation&) {
        if (rng->chance(1, 3)) return DelayerReply::deferred();
        return rng->next_bit() ? DelayerReply::directed(i, j) : DelayerReply::directed(j, i);
    };
}

namespace {

// Minimax over partial assignments, memoized on the trit encoding of rho.
// Delayer picks max of {answer 0, answer 1, 1 + Prover's best direction};
// Prover picks the query minimizing that.
class GameSolver {
public:
    explicit GameSolver(int n) : n_(n), pairs_(int(pair_count(n))) {}

    int value(PartialOrientation& rho) {
        uint64_t key = encode(rho);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        int result;
        if (terminal(rho)) {
            result = 0;
        } else {
            result = INT32_MAX;
            for (int k = 0; k < pairs_; ++k) {
                auto [i, j] = pair_at(n_, k);
                if (rho.is_set(i, j)) continue;
                int fwd = child_value(rho, i, j);
                int rev = child_value(rho, j, i);
                int delayer_best = std::max({fwd, rev, 1 + std::min(fwd, rev)});
                result = std::min(result, delayer_best);
            }
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    int child_value(PartialOrientation& rho, int from, int to) {
        PartialOrientation next = rho;
        next.set_direction(from, to);
        return value(next);
    }

    bool terminal(const PartialOrientation& rho) const {
        for (int v = 1; v <= n_; ++v)
            if (king_in_all_completions(rho, v)) return true;
        return false;
    }

    uint64_t encode(const PartialOrientation& rho) const {
        uint64_t key = 0;
        for (int k = 0; k < pairs_; ++k) {
            auto [i, j] = pair_at(n_, k);
            int trit = !rho.is_set(i, j) ? 0 : (rho.points(i, j) ? 1 : 2);
            key = key * 3 + uint64_t(trit);
        }
        return key;
    }

    int n_;
    int pairs_;
    std::map<uint64_t, int> memo_;
};

}  // namespace

int exact_game_value(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("exact_game_value: supported for n <= 4 only");
    PartialOrientation rho(n);
    GameSolver solver(n);
    return solver.value(rho);
}

}  // namespace tcc
