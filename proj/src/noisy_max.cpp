#include "tcc/noisy_max.hpp"

#include <stdexcept>
#include <vector>

namespace tcc {

int noisy_max(int n, const std::function<bool(int, int)>& noisy_geq, NoisyMaxStats* stats) {
    if (n < 1) throw std::invalid_argument("noisy_max: n must be positive");
    std::vector<int> alive(size_t(n), 0);
    for (int i = 0; i < n; ++i) alive[size_t(i)] = i + 1;
    uint64_t calls = 0;
    int matches = 0;
    for (int height = 0; alive.size() > 1; ++height) {
        std::vector<int> survivors;
        survivors.reserve((alive.size() + 1) / 2);
        int t = bracket_votes(height);
        for (size_t k = 0; k + 1 < alive.size(); k += 2) {
            int a = alive[k], b = alive[k + 1];
            int votes_a = 0;
            for (int q = 0; q < t; ++q)
                if (noisy_geq(a, b)) ++votes_a;
            calls += uint64_t(t);
            ++matches;
            survivors.push_back(2 * votes_a >= t ? a : b);  // tie: lower slot
        }
        if (alive.size() % 2) survivors.push_back(alive.back());
        alive = std::move(survivors);
    }
    if (stats) {
        stats->oracle_calls = calls;
        stats->matches = matches;
    }
    return alive.front();
}

}  // namespace tcc
