#include "tcc/query_king.hpp"

#include <algorithm>

namespace tcc {

CountingOracle::CountingOracle(const Tournament& t, bool cache) : t_(&t), cache_(cache) {
    seen_.assign(size_t(pair_count(t.n())), 0);
}

bool CountingOracle::query(int i, int j) {
    int64_t idx = pair_index(t_->n(), i, j);
    if (!cache_ || !seen_[size_t(idx)]) {
        if (cache_) seen_[size_t(idx)] = 1;
        ++count_;
        log_.emplace_back(std::min(i, j), std::max(i, j));
    }
    return t_->points(i, j);
}

QueryKingResult randomized_king_query(CountingOracle& oracle, Rng& rng) {
    int n = oracle.n();
    std::vector<int> t(size_t(n), 0);
    for (int v = 1; v <= n; ++v) t[size_t(v - 1)] = v;

    while (int64_t(t.size()) * int64_t(t.size()) > n) {
        int v = t[size_t(rng.below(t.size()))];
        std::vector<int> in_nbrs;
        for (int u : t)
            if (u != v && !oracle.query(v, u)) in_nbrs.push_back(u);
        if (in_nbrs.empty()) return {v, oracle.queries()};  // v is a source of G|T
        t = std::move(in_nbrs);
    }

    // brute force on the survivors: query every pair, output a maximum
    // out-degree vertex (always a king of the induced subtournament)
    std::vector<int> deg(t.size(), 0);
    for (size_t a = 0; a < t.size(); ++a)
        for (size_t b = a + 1; b < t.size(); ++b) {
            if (oracle.query(t[a], t[b]))
                ++deg[a];
            else
                ++deg[b];
        }
    size_t best = 0;
    for (size_t k = 1; k < t.size(); ++k)
        if (deg[k] > deg[best]) best = k;
    return {t[best], oracle.queries()};
}

}  // namespace tcc
