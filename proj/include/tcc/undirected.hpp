#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcc/tournament.hpp"

namespace tcc {

/// Simple undirected graph on [n], adjacency stored per unordered pair in the
/// same pair order as Tournament. No self-loops.
class UndirectedGraph {
public:
    explicit UndirectedGraph(int n);

    int n() const { return n_; }
    bool adjacent(int i, int j) const;
    void add_edge(int i, int j);
    int64_t edge_count() const { return edges_; }

    VertexSet neighbors(int v) const;
    int degree_within(int v, const std::vector<char>& in_set) const;

    /// Complement graph (edges exactly where this graph has none).
    UndirectedGraph complement() const;

private:
    int n_ = 0;
    int64_t edges_ = 0;
    std::vector<uint64_t> w_;
};

std::vector<VertexSet> components(const UndirectedGraph& g);
VertexSet component_of(const UndirectedGraph& g, int v);
bool is_connected(const UndirectedGraph& g);

bool is_independent_set(const UndirectedGraph& g, const VertexSet& s);
bool is_clique(const UndirectedGraph& g, const VertexSet& s);

/// Orient g's edges so the in-degree-0 vertices are exactly the independent
/// set I: BFS layers away from I, within-layer edges toward the larger label.
/// Requires g connected and I a nonempty independent set.
PartialOrientation orient_from_independent_set(const UndirectedGraph& g, const VertexSet& indep);

/// Orient g's edges so every vertex has in-degree >= 1: one cycle oriented
/// cyclically, remaining edges BFS-oriented away from it. Requires g
/// connected with at least one cycle.
PartialOrientation orient_indeg_positive(const UndirectedGraph& g);

// Text form mirrors Tournament: line 1 = n, line 2 = bitstring, 1 = edge present.
std::string serialize(const UndirectedGraph& g);
UndirectedGraph parse_graph(const std::string& text);

/// Connected graph on n vertices: a random spanning tree plus each remaining
/// pair independently with probability extra_num/extra_den.
UndirectedGraph random_connected_graph(int n, uint64_t seed, uint64_t extra_num = 1, uint64_t extra_den = 3);

}  // namespace tcc
