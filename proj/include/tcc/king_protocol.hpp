#pragma once

#include "tcc/protocol.hpp"
#include "tcc/tournament.hpp"

namespace tcc {

struct KingRunStats {
    std::vector<int> s_sizes;  ///< |S| at the start of each halving round
    int loop_rounds = 0;
    int terminal_ship_bits = 0;
};

struct KingResult {
    int king = 0;
    Transcript tr;
    KingRunStats stats;
};

/// Deterministic two-party protocol for finding a king of t under partition p.
///
/// While both sides own more than n live pairs (within the candidate set S),
/// the side with more live pairs announces its max-out-degree vertex v
/// (ceil(log2 |S|) bits) plus the |S|-bit indicator of v's in-neighbourhood on
/// its own pairs; the other side answers with its own indicator; S shrinks to
/// the joint in-neighbourhood. When a side's live count drops to at most n it
/// ships its remaining direction bits and the receiver announces a king
/// (lowest-label maximum-out-degree vertex of the reconstructed G|S).
KingResult king_protocol(const Tournament& t, const EdgePartition& p, const RunOptions& opts = {});

}  // namespace tcc
