#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcc/bits.hpp"
#include "tcc/partition.hpp"

namespace tcc {

struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full record of a protocol run. rounds == number of (nonempty) messages.
/// The engine asserts bits_alice + bits_bob == sum of message lengths and
/// output_alice == output_bob before returning.
struct Transcript {
    struct Message {
        Party sender;
        Bits bits;
    };
    std::vector<Message> messages;  // empty if the run used counting mode
    uint64_t bits_alice = 0;
    uint64_t bits_bob = 0;
    uint64_t rounds = 0;
    int64_t output_alice = 0;
    int64_t output_bob = 0;

    uint64_t total_bits() const { return bits_alice + bits_bob; }
    /// Per-message lines `sender,length,bits` plus a totals footer.
    std::string dump() const;
};

/// One engine step: either a message (possibly empty, meaning "pass") or the
/// party's final output.
struct Step {
    enum class Kind { send, finish } kind = Kind::send;
    Bits bits;
    int64_t output = 0;

    static Step send(Bits b) { return Step{Kind::send, std::move(b), 0}; }
    static Step pass() { return Step{Kind::send, {}, 0}; }
    static Step finish(int64_t out) { return Step{Kind::finish, {}, out}; }
};

/// A party in a two-party protocol. observe() is called once per recorded
/// message (both parties see every message, sender included); act() is called
/// when it is this party's turn to speak. Strategies must be deterministic
/// functions of (private input, observed transcript, public seed); internal
/// state is memoization of that, nothing more.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual void observe(Party sender, const Bits& bits) = 0;
    virtual Step act() = 0;
};

struct RunOptions {
    uint64_t max_steps = 0;       ///< 0 = derived default (10*n^2 + 64)
    bool record_messages = true;  ///< false: count bits/rounds only
};

/// Drive two strategies to completion under strict alternation (empty sends
/// pass the turn silently). Throws ProtocolError on output mismatch, on a
/// message after the peer finished, or when max_steps is exceeded
/// (nontermination).
Transcript run_protocol(Strategy& alice, Strategy& bob, Party first, int n_for_limit,
                        const RunOptions& opts = {});

}  // namespace tcc
