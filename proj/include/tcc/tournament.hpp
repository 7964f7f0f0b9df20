#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcc/bits.hpp"

namespace tcc {

/// Vertices are 1-based labels 1..n. A VertexSet is kept sorted ascending.
using VertexSet = std::vector<int>;

/// Unordered pairs {i,j}, i<j, in lexicographic order (1,2),(1,3),...,(2,3),...
/// This order is the canonical index for tournament bits, partition owners
/// and file serialization.
inline int64_t pair_count(int n) { return int64_t(n) * (n - 1) / 2; }

/// 0-based index of pair {i,j} (any order, i != j) among the n-vertex pairs.
int64_t pair_index(int n, int i, int j);

/// Inverse of pair_index: the k-th pair (i,j) with i<j.
std::pair<int, int> pair_at(int n, int64_t k);

void check_vertex(int n, int v);  // throws std::out_of_range

/// A ranking of [n]: rank_of(i) is the rank of element i, a bijection on [n].
class Permutation {
public:
    Permutation() = default;
    /// ranks[k] = rank of element k+1. Validates bijectivity.
    explicit Permutation(std::vector<int> ranks);
    static Permutation identity(int n);

    int n() const { return int(ranks_.size()); }
    int rank_of(int i) const { return ranks_.at(size_t(i - 1)); }
    /// Element with the given rank.
    int element_with_rank(int r) const;
    const std::vector<int>& ranks() const { return ranks_; }

private:
    std::vector<int> ranks_;
};

// ---------------------------------------------------------------------------
// Tournament: complete directed graph, one direction bit per unordered pair.
// Bit 1 for pair (i,j), i<j, means the edge is directed i -> j.
// Immutable in spirit: mutation happens only while an instance is built.
// ---------------------------------------------------------------------------
class Tournament {
public:
    explicit Tournament(int n);

    int n() const { return n_; }

    /// Stored bit for pair {i,j} (i != j, any order given as (i,j) with i<j
    /// internally): true iff min->max.
    bool pair_bit(int i, int j) const;
    void set_pair_bit(int i, int j, bool min_to_max);

    /// true iff the edge between `from` and `to` is directed from -> to.
    bool points(int from, int to) const;
    /// Orient the pair as from -> to.
    void set_direction(int from, int to);

    /// Raw packed words (pair-index order), for fast scans.
    const std::vector<uint64_t>& words() const { return w_; }
    void set_pair_bit_by_index(int64_t idx, bool b);
    bool pair_bit_by_index(int64_t idx) const;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

/// Out-neighbour rows as n bitmask rows of ceil(n/64) words each; row v has
/// bit (u-1) set iff v -> u. Built once per tournament for the oracles.
class AdjacencyView {
public:
    explicit AdjacencyView(const Tournament& t);
    int n() const { return n_; }
    int words_per_row() const { return wpr_; }
    const uint64_t* row(int v) const { return rows_.data() + size_t(v - 1) * wpr_; }

private:
    int n_;
    int wpr_;
    std::vector<uint64_t> rows_;
};

// -- Operations -------------------------------------------------------------

/// Oriented edge of the pair {i,j}: returns (i,j) or (j,i).
std::pair<int, int> direction(const Tournament& t, int i, int j);

struct Neighborhoods {
    VertexSet in, out;
    int in_degree = 0, out_degree = 0;
};
Neighborhoods neighborhoods(const Tournament& t, int v);

std::vector<int> out_degrees(const Tournament& t);

/// King test by direct 1-/2-step domination (O(n^2/64) with row masks).
bool is_king(const Tournament& t, int v);
bool is_king(const AdjacencyView& adj, int v);

/// All kings, by running is_king on every vertex. The dumb oracle.
VertexSet all_kings(const Tournament& t);

/// The unique vertex of in-degree 0, or 0 if none exists.
int source_of(const Tournament& t);

/// All vertices attaining the maximum out-degree (nonempty).
VertexSet max_out_degree_set(const Tournament& t);

struct Induced {
    Tournament sub;
    std::vector<int> labels;  ///< labels[k] = original label of sub-vertex k+1
};
/// Subtournament induced on S (S nonempty, sorted ascending).
Induced induced(const Tournament& t, const VertexSet& s);

/// If t is acyclic: the unique order v1..vn with v1 the source and each vi the
/// source of what remains. Otherwise nullopt (NOT_TRANSITIVE).
std::optional<std::vector<int>> transitive_order(const Tournament& t);

/// Transitive tournament with i -> j iff rank(i) > rank(j); the source is the
/// element of maximum rank.
Tournament transitive_from_permutation(const Permutation& sigma);

/// Every pair bit independently uniform; same (n, seed) gives identical bits.
Tournament random_tournament(int n, uint64_t seed);

// -- Serialization ------------------------------------------------------------
// Text form: line 1 = n, line 2 = bitstring of length n(n-1)/2 in pair order.

std::string serialize(const Tournament& t);
Tournament parse_tournament(const std::string& text);

std::string vertex_set_to_string(const VertexSet& s);
VertexSet parse_vertex_set(const std::string& text);

// ---------------------------------------------------------------------------
// PartialOrientation: per-pair direction or unset. Used as the rank game's
// partial assignment rho and for orienting graph edges (pairs outside the
// graph simply stay unset).
// ---------------------------------------------------------------------------
class PartialOrientation {
public:
    explicit PartialOrientation(int n);

    int n() const { return n_; }
    bool is_set(int i, int j) const;
    /// true iff the pair is set and directed from -> to.
    bool points(int from, int to) const;
    void set_direction(int from, int to);
    int64_t set_count() const { return set_count_; }

    int in_degree(int v) const;   ///< over set pairs only
    int out_degree(int v) const;  ///< over set pairs only

    /// Complete into a tournament; unset pairs get min->max.
    Tournament complete_arbitrary() const;

private:
    int n_ = 0;
    int64_t set_count_ = 0;
    std::vector<int8_t> d_;  // 0 unset, 1 min->max, 2 max->min
};

/// True iff v is a king in every tournament completing rho. Witness rule: for
/// each w != v either v->w is set, or some u has both v->u and u->w set.
/// (Equivalent to checking the completion that is pessimal for v.)
bool king_in_all_completions(const PartialOrientation& rho, int v);

struct ParseError : std::runtime_error {
    size_t line, column;
    ParseError(const std::string& msg, size_t line_, size_t col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

}  // namespace tcc
