#pragma once

#include <cstdint>
#include <vector>

#include "tcc/partition.hpp"
#include "tcc/protocol.hpp"
#include "tcc/tournament.hpp"

namespace tcc {

/// Per-vertex out-degree counts restricted to one party's edges. Entry v is
/// in [0, n-1]; the two parties' entries for v sum to d+(v).
using DegreeVector = std::vector<int>;

struct MaxsumResult {
    int index = 0;
    Transcript tr;
};

/// Deterministic MAXSUM: Alice dumps her vector (n*ceil(log2 n) bits), Bob
/// answers argmax(a_j + b_j), lowest index on ties (ceil(log2 n) bits).
MaxsumResult maxsum_det(const DegreeVector& a, const DegreeVector& b, const RunOptions& opts = {});

/// Randomized MAXSUM: a noisy-max bracket whose comparisons are GT calls on
/// the shifted differences (a_i - a_j + n vs b_j - b_i + n). Succeeds with
/// probability >= 2/3; cost is (deterministically) the bracket call count
/// times the fixed per-call GT cost, plus the final index echo.
MaxsumResult maxsum_rand(const DegreeVector& a, const DegreeVector& b, uint64_t public_seed,
                         const RunOptions& opts = {});

/// Zero-communication reduction: each party's out-degree vector on its own
/// pairs. a[v-1] + b[v-1] = d+(v) for every v.
std::pair<DegreeVector, DegreeVector> mod_degree_vectors(const Tournament& t, const EdgePartition& p);

enum class ModMode { det, rand };

/// Maximum-out-degree vertex via mod_degree_vectors + maxsum. det mode is
/// always exact; rand mode succeeds with probability >= 2/3.
MaxsumResult mod_protocol(const Tournament& t, const EdgePartition& p, ModMode mode, uint64_t public_seed = 0,
                          const RunOptions& opts = {});

}  // namespace tcc
