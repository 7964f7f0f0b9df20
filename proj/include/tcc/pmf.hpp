#pragma once

#include "tcc/tournament.hpp"

namespace tcc {

/// Permutation-maximum-finding instance: Alice's subset S of [n] and Bob's
/// ranking sigma. The answer is the top-ranked element of S, or 0 when S is
/// empty (the bottom symbol).
struct PMFInstance {
    VertexSet s;
    Permutation sigma;
};

int pmf_eval(const PMFInstance& inst);

/// Zero-communication equivalence with IndexKING on transitive tournaments:
/// Bob turns sigma into the transitive tournament whose dominance order is
/// by decreasing rank, so the king of G|S is exactly the PMF answer.
std::pair<VertexSet, Tournament> pmf_to_tindexking(const PMFInstance& inst);
PMFInstance tindexking_to_pmf(const VertexSet& s, const Tournament& transitive);

/// Set-disjointness reduction: sigma ranks all of T above its complement
/// (ascending index inside each block), so the PMF answer lands in T exactly
/// when Sa and T intersect.
struct DisjReduction {
    PMFInstance inst;
    VertexSet t;

    /// Map a PMF answer (0 = bottom) to the DISJ value: 1 = disjoint.
    int decode(int pmf_answer) const;
};
DisjReduction disj_to_pmf(const VertexSet& sa, const VertexSet& t, int n);

}  // namespace tcc
