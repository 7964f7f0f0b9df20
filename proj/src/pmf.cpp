#include "tcc/pmf.hpp"

#include <algorithm>

namespace tcc {

int pmf_eval(const PMFInstance& inst) {
    int best = 0;
    for (int v : inst.s) {
        check_vertex(inst.sigma.n(), v);
        if (best == 0 || inst.sigma.rank_of(v) > inst.sigma.rank_of(best)) best = v;
    }
    return best;
}

std::pair<VertexSet, Tournament> pmf_to_tindexking(const PMFInstance& inst) {
    return {inst.s, transitive_from_permutation(inst.sigma)};
}

PMFInstance tindexking_to_pmf(const VertexSet& s, const Tournament& transitive) {
    auto order = transitive_order(transitive);
    if (!order) throw std::invalid_argument("tindexking_to_pmf: tournament is not transitive");
    // rank = out-degree + 1: the source gets the top rank
    std::vector<int> ranks(size_t(transitive.n()));
    std::vector<int> d = out_degrees(transitive);
    for (int v = 1; v <= transitive.n(); ++v) ranks[size_t(v - 1)] = d[size_t(v - 1)] + 1;
    return {s, Permutation(std::move(ranks))};
}

int DisjReduction::decode(int pmf_answer) const {
    if (pmf_answer == 0) return 1;  // empty Sa: disjoint
    return std::binary_search(t.begin(), t.end(), pmf_answer) ? 0 : 1;
}

DisjReduction disj_to_pmf(const VertexSet& sa, const VertexSet& t, int n) {
    for (int v : sa) check_vertex(n, v);
    for (int v : t) check_vertex(n, v);
    std::vector<int> ranks(size_t(n), 0);
    int next = 1;
    for (int v = 1; v <= n; ++v)
        if (!std::binary_search(t.begin(), t.end(), v)) ranks[size_t(v - 1)] = next++;
    for (int v : t) ranks[size_t(v - 1)] = next++;
    return {{sa, Permutation(std::move(ranks))}, t};
}

}  // namespace tcc
