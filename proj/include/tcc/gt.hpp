#pragma once

#include <cstdint>

#include "tcc/protocol.hpp"

namespace tcc {

/// Parameters of one greater-than comparison over operands in [1, N]:
/// m-bit operands, exactly probes = ceil(log2(m+1)) prefix-equality tests
/// (the search pads with no-op probes once the window closes, so every call
/// costs the same), each an h = 2*ceil(log2 m) + 4 bit public-randomness
/// fingerprint plus a verdict bit, and one final answer bit. Error at most
/// probes * 2^-h <= 1/3.
struct GtParams {
    int m = 1;
    int h = 6;
    int probes = 1;

    static GtParams for_universe(uint64_t N);
    int bits_per_call() const { return probes * (h + 1) + 1; }
};

struct GtResult {
    int bit = 0;  ///< 1 iff x >= y
    Transcript tr;
};

/// Randomized protocol for GT(x, y) = [x >= y], x Alice's, y Bob's, both in
/// [1, N]. Binary search for the longest common prefix via fingerprint
/// probes; the most significant differing bit of x decides. public_seed
/// feeds the shared randomness; fresh salts make invocations independent.
GtResult gt_protocol(uint64_t x, uint64_t y, uint64_t N, uint64_t public_seed, const RunOptions& opts = {});

/// Reusable message-level session so other protocols can embed GT exchanges
/// in their own transcripts. Message order: Alice fingerprint (h bits), Bob
/// verdict (1 bit), repeated `probes` times, then Alice's answer bit.
class GtSession {
public:
    GtSession(GtParams params, uint64_t stream_seed);

    bool done() const { return done_; }
    int answer() const { return answer_; }
    Party next_sender() const;
    /// Next message from `sender`, computed from that party's operand.
    Bits next_message(Party sender, uint64_t operand) const;
    /// Advance the shared state with an observed message.
    void on_message(const Bits& bits);

private:
    uint64_t fingerprint(uint64_t operand, int prefix_len) const;
    int probe_prefix_len() const { return lo_ < hi_ ? (lo_ + hi_ + 1) / 2 : lo_; }

    GtParams p_;
    uint64_t seed_;
    int probe_index_ = 0;
    int lo_ = 0, hi_ = 0;      // window for the longest-common-prefix length
    bool awaiting_verdict_ = false;
    uint64_t last_fp_ = 0;
    bool in_answer_phase_ = false;
    bool done_ = false;
    int answer_ = 0;
};

}  // namespace tcc
