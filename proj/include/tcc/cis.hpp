#pragma once

#include "tcc/protocol.hpp"
#include "tcc/tournament.hpp"
#include "tcc/undirected.hpp"

namespace tcc {

/// A clique-vs-independent-set instance on a public graph. The clique is
/// Bob's private input, the independent set Alice's. |clique ∩ indep| <= 1.
struct CISInstance {
    UndirectedGraph graph;
    VertexSet clique;
    VertexSet indep;

    void validate() const;  // throws std::invalid_argument on violation
};

struct CisStats {
    int announce_rounds = 0;      ///< rounds that named a candidate (these halve R)
    std::vector<int> r_sizes;     ///< |R| before each announcement
};

struct CisResult {
    int vertex = 0;  ///< 0 = empty intersection
    Transcript tr;
    CisStats stats;
};

/// Alternating-halving protocol for the unique intersection vertex.
///
/// Over a live candidate set R (initially [n]): Bob announces some v in
/// C ∩ R with at most |R|/2 neighbours in R, Alice verdicts v ∈ I; if
/// rejected R becomes R ∩ N(v). If Bob cannot move, Alice symmetrically
/// announces u in I ∩ R with at most |R|/2 non-neighbours (rejected: R
/// becomes the non-neighbours). If neither side can move the intersection is
/// empty. Cost is at most (ceil(log2 n)+4)^2 bits.
CisResult cis_protocol(const CISInstance& inst, const RunOptions& opts = {});

/// CIS -> SRC reduction with its O(log n) preprocessing. Either resolves the
/// instance outright (component restriction left fewer than 3 independent-set
/// vertices) or builds a source-finding instance on the clique's component
/// whose source is exactly the intersection vertex.
struct CisToSrc {
    bool resolved = false;
    int answer = 0;               ///< valid when resolved; 0 = empty
    Tournament t{1};              ///< valid when !resolved
    EdgePartition p{1};
    std::vector<int> labels;      ///< labels[k] = original label of vertex k+1
    Transcript preprocessing;
};
CisToSrc cis_to_src(const CISInstance& inst);

/// SRC -> CIS reduction, zero communication: the graph is Alice's pair set,
/// her independent set the vertices with in-degree 0 on her own edges, Bob's
/// clique likewise. The intersection is nonempty iff t has a source.
struct SrcToCis {
    UndirectedGraph graph;
    VertexSet clique;
    VertexSet indep;
};
SrcToCis src_to_cis(const Tournament& t, const EdgePartition& p);

struct SrcResult {
    int source = 0;  ///< 0 = no source
    Transcript tr;
    CisStats stats;
};

/// Find the source of t (or report none) by composing src_to_cis with
/// cis_protocol. The reduction itself costs zero bits.
SrcResult src_protocol(const Tournament& t, const EdgePartition& p, const RunOptions& opts = {});

/// Decision wrapper: 1 iff a source exists.
struct SrcDecResult {
    int bit = 0;
    Transcript tr;
};
SrcDecResult src_dec_protocol(const Tournament& t, const EdgePartition& p, const RunOptions& opts = {});

}  // namespace tcc
