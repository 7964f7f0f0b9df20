#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcc/tournament.hpp"

namespace tcc {

enum class Party : int { alice = 0, bob = 1 };
inline Party other(Party p) { return p == Party::alice ? Party::bob : Party::alice; }
inline char party_char(Party p) { return p == Party::alice ? 'A' : 'B'; }

/// Per-pair owner tags, same pair order as Tournament. The partition is
/// common knowledge to both parties; only direction bits are private.
class EdgePartition {
public:
    explicit EdgePartition(int n);  // all pairs to Alice

    int n() const { return n_; }
    Party owner(int i, int j) const;
    Party owner_by_index(int64_t idx) const;
    void set_owner(int i, int j, Party p);
    void set_owner_by_index(int64_t idx, Party p);

    /// Number of pairs owned by `p` with both endpoints in the sorted set `s`.
    int64_t owned_within(Party p, const VertexSet& s) const;

private:
    int n_ = 0;
    std::vector<uint64_t> bob_;  // bit set = Bob owns the pair
};

EdgePartition all_alice_partition(int n);
/// Alice owns pairs inside the first ceil(n/2) vertices and inside the rest;
/// Bob owns the crossing pairs.
EdgePartition split_halves_partition(int n);
EdgePartition random_partition(int n, uint64_t seed);

// Text form: line 1 = n, line 2 = string over {A,B} in pair order.
std::string serialize(const EdgePartition& p);
EdgePartition parse_partition(const std::string& text);

}  // namespace tcc
