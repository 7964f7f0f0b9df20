#include "tcc/undirected.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "tcc/rng.hpp"

namespace tcc {

UndirectedGraph::UndirectedGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("UndirectedGraph: n must be positive");
    w_.assign(size_t((pair_count(n) + 63) / 64), 0);
}

bool UndirectedGraph::adjacent(int i, int j) const {
    if (i == j) return false;
    int64_t idx = pair_index(n_, i, j);
    return (w_[size_t(idx >> 6)] >> (idx & 63)) & 1;
}

void UndirectedGraph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("UndirectedGraph: self-loop");
    int64_t idx = pair_index(n_, i, j);
    uint64_t mask = uint64_t(1) << (idx & 63);
    if (!(w_[size_t(idx >> 6)] & mask)) {
        w_[size_t(idx >> 6)] |= mask;
        ++edges_;
    }
}

VertexSet UndirectedGraph::neighbors(int v) const {
    VertexSet nb;
    for (int u = 1; u <= n_; ++u)
        if (u != v && adjacent(v, u)) nb.push_back(u);
    return nb;
}

int UndirectedGraph::degree_within(int v, const std::vector<char>& in_set) const {
    int d = 0;
    for (int u = 1; u <= n_; ++u)
        if (u != v && in_set[size_t(u)] && adjacent(v, u)) ++d;
    return d;
}

UndirectedGraph UndirectedGraph::complement() const {
    UndirectedGraph c(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (!adjacent(i, j)) c.add_edge(i, j);
    return c;
}

std::vector<VertexSet> components(const UndirectedGraph& g) {
    std::vector<char> seen(size_t(g.n()) + 1, 0);
    std::vector<VertexSet> comps;
    for (int s = 1; s <= g.n(); ++s) {
        if (seen[size_t(s)]) continue;
        VertexSet comp;
        std::deque<int> queue{s};
        seen[size_t(s)] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int u = 1; u <= g.n(); ++u)
                if (!seen[size_t(u)] && g.adjacent(v, u)) {
                    seen[size_t(u)] = 1;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

VertexSet component_of(const UndirectedGraph& g, int v) {
    check_vertex(g.n(), v);
    for (auto& comp : components(g))
        if (std::binary_search(comp.begin(), comp.end(), v)) return comp;
    return {};
}

bool is_connected(const UndirectedGraph& g) { return components(g).size() == 1; }

bool is_independent_set(const UndirectedGraph& g, const VertexSet& s) {
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            if (g.adjacent(s[a], s[b])) return false;
    return true;
}

bool is_clique(const UndirectedGraph& g, const VertexSet& s) {
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            if (!g.adjacent(s[a], s[b])) return false;
    return true;
}

namespace {

// BFS-layer orientation restricted to `subset` (sorted): edges between layers
// point away from the seed set, edges within a layer toward the larger label.
// Seeds get in-degree 0 unless they have edges among themselves.
void orient_layers_from(const UndirectedGraph& g, const VertexSet& subset, const VertexSet& seeds,
                        PartialOrientation& out) {
    std::vector<char> member(size_t(g.n()) + 1, 0);
    for (int v : subset) member[size_t(v)] = 1;
    std::vector<int> dist(size_t(g.n()) + 1, -1);
    std::deque<int> queue;
    for (int s : seeds) {
        dist[size_t(s)] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u = 1; u <= g.n(); ++u)
            if (member[size_t(u)] && dist[size_t(u)] < 0 && g.adjacent(v, u)) {
                dist[size_t(u)] = dist[size_t(v)] + 1;
                queue.push_back(u);
            }
    }
    for (size_t a = 0; a < subset.size(); ++a)
        for (size_t b = a + 1; b < subset.size(); ++b) {
            int i = subset[a], j = subset[b];
            if (!g.adjacent(i, j)) continue;
            int di = dist[size_t(i)], dj = dist[size_t(j)];
            if (di < dj)
                out.set_direction(i, j);
            else if (dj < di)
                out.set_direction(j, i);
            else
                out.set_direction(std::min(i, j), std::max(i, j));  // within layer: toward larger label
        }
}

// One cycle inside `subset`, found via DFS back edge.
VertexSet find_cycle_within(const UndirectedGraph& g, const VertexSet& subset) {
    std::vector<char> member(size_t(g.n()) + 1, 0);
    for (int v : subset) member[size_t(v)] = 1;
    std::vector<int> parent(size_t(g.n()) + 1, 0);
    std::vector<char> seen(size_t(g.n()) + 1, 0);
    std::vector<int> stack{subset.front()};
    seen[size_t(subset.front())] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 1; u <= g.n(); ++u) {
            if (!member[size_t(u)] || u == parent[size_t(v)] || !g.adjacent(v, u)) continue;
            if (!seen[size_t(u)]) {
                seen[size_t(u)] = 1;
                parent[size_t(u)] = v;
                stack.push_back(u);
            } else {
                // back edge v-u closes a cycle; walk both ancestries
                VertexSet path_v, path_u;
                for (int x = v; x != 0; x = parent[size_t(x)]) path_v.push_back(x);
                for (int x = u; x != 0; x = parent[size_t(x)]) path_u.push_back(x);
                // find lowest common ancestor
                std::vector<char> on_v(size_t(g.n()) + 1, 0);
                for (int x : path_v) on_v[size_t(x)] = 1;
                int lca = 0;
                for (int x : path_u)
                    if (on_v[size_t(x)]) {
                        lca = x;
                        break;
                    }
                VertexSet cycle;
                for (int x = v; x != lca; x = parent[size_t(x)]) cycle.push_back(x);
                cycle.push_back(lca);
                VertexSet tail;
                for (int x = u; x != lca; x = parent[size_t(x)]) tail.push_back(x);
                std::reverse(tail.begin(), tail.end());
                cycle.insert(cycle.end(), tail.begin(), tail.end());
                return cycle;
            }
        }
    }
    return {};
}

}  // namespace

PartialOrientation orient_from_independent_set(const UndirectedGraph& g, const VertexSet& indep) {
    if (indep.empty()) throw std::invalid_argument("orient_from_independent_set: empty independent set");
    if (!is_connected(g)) throw std::invalid_argument("orient_from_independent_set: graph not connected");
    if (!is_independent_set(g, indep)) throw std::invalid_argument("orient_from_independent_set: set not independent");
    PartialOrientation out(g.n());
    VertexSet all(size_t(g.n()));
    for (int v = 1; v <= g.n(); ++v) all[size_t(v - 1)] = v;
    orient_layers_from(g, all, indep, out);
    return out;
}

PartialOrientation orient_indeg_positive(const UndirectedGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("orient_indeg_positive: graph not connected");
    if (g.edge_count() < g.n()) throw std::invalid_argument("orient_indeg_positive: graph is a tree");
    VertexSet all(size_t(g.n()));
    for (int v = 1; v <= g.n(); ++v) all[size_t(v - 1)] = v;
    VertexSet cycle = find_cycle_within(g, all);
    PartialOrientation out(g.n());
    for (size_t k = 0; k < cycle.size(); ++k) out.set_direction(cycle[k], cycle[(k + 1) % cycle.size()]);
    VertexSet seeds = cycle;
    std::sort(seeds.begin(), seeds.end());
    // layer the rest away from the cycle; cycle-internal chords keep their
    // within-layer rule but never disturb the in-degrees already >= 1
    std::vector<char> on_cycle(size_t(g.n()) + 1, 0);
    for (int v : cycle) on_cycle[size_t(v)] = 1;
    PartialOrientation layered(g.n());
    orient_layers_from(g, all, seeds, layered);
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j) {
            if (!g.adjacent(i, j) || out.is_set(i, j)) continue;
            if (layered.points(i, j))
                out.set_direction(i, j);
            else
                out.set_direction(j, i);
        }
    return out;
}

std::string serialize(const UndirectedGraph& g) {
    std::string out = std::to_string(g.n());
    out.push_back('\n');
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j) out.push_back(g.adjacent(i, j) ? '1' : '0');
    out.push_back('\n');
    return out;
}

UndirectedGraph parse_graph(const std::string& text) {
    Tournament t = parse_tournament(text);  // same wire shape
    UndirectedGraph g(t.n());
    for (int i = 1; i <= t.n(); ++i)
        for (int j = i + 1; j <= t.n(); ++j)
            if (t.pair_bit(i, j)) g.add_edge(i, j);
    return g;
}

UndirectedGraph random_connected_graph(int n, uint64_t seed, uint64_t extra_num, uint64_t extra_den) {
    UndirectedGraph g(n);
    Rng rng(derive_seed(seed, 0x67726170ULL));
    for (int v = 2; v <= n; ++v) g.add_edge(v, int(rng.below(uint64_t(v - 1))) + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!g.adjacent(i, j) && rng.chance(extra_num, extra_den)) g.add_edge(i, j);
    return g;
}

}  // namespace tcc
