#pragma once

#include "tcc/partition.hpp"
#include "tcc/tournament.hpp"

namespace tcc {

/// The three-copy tournament on 3n vertices whose only kings (and only
/// maximum-out-degree vertices) are the three copies of argmax_{j in S}
/// sigma(j). Copy b of element i has global label i + b*n.
///
/// Edge rules for i_b vs j_b' (as unordered pairs):
///  - same copy (b = b'): i_b -> j_b iff sigma(i) > sigma(j)        [Bob]
///  - cross copy, exactly one of i, j in S: the S-side copy wins     [Alice]
///  - cross copy otherwise (both in S, both out, or i = j):
///    i_b -> j_b' iff b' = b+1 (mod 3)                               [Alice]
struct GSSigma {
    int base_n = 0;
    VertexSet s;
    Permutation sigma;
    Tournament t{1};
    EdgePartition p{1};

    int label(int element, int copy) const { return element + copy * base_n; }
    int element_of(int label) const { return (label - 1) % base_n + 1; }
    int copy_of(int label) const { return (label - 1) / base_n; }
    /// The three predicted kings: copies of the PMF answer.
    VertexSet predicted_kings() const;
};

GSSigma build_gssigma(int n, const VertexSet& s, const Permutation& sigma);

}  // namespace tcc
