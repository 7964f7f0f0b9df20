#include "tcc/protocol.hpp"

namespace tcc {

std::string Transcript::dump() const {
    std::string out;
    for (const Message& m : messages) {
        out.push_back(party_char(m.sender));
        out.push_back(',');
        out += std::to_string(m.bits.size());
        out.push_back(',');
        out += m.bits.to_string();
        out.push_back('\n');
    }
    out += "TOTAL,bits_alice=" + std::to_string(bits_alice) + ",bits_bob=" + std::to_string(bits_bob) +
           ",rounds=" + std::to_string(rounds) + ",output=" + std::to_string(output_alice) + "\n";
    return out;
}

Transcript run_protocol(Strategy& alice, Strategy& bob, Party first, int n_for_limit, const RunOptions& opts) {
    Transcript tr;
    uint64_t limit = opts.max_steps ? opts.max_steps : 10 * uint64_t(n_for_limit) * uint64_t(n_for_limit) + 64;
    Party turn = first;
    bool finished[2] = {false, false};
    uint64_t recorded_bits = 0;

    for (uint64_t step_count = 0; step_count < limit; ++step_count) {
        Strategy& who = (turn == Party::alice) ? alice : bob;
        Step step = who.act();
        if (step.kind == Step::Kind::send) {
            if (finished[size_t(other(turn))])
                throw ProtocolError("protocol contract: message sent after the peer finished");
            if (!step.bits.empty()) {
                if (turn == Party::alice)
                    tr.bits_alice += step.bits.size();
                else
                    tr.bits_bob += step.bits.size();
                recorded_bits += step.bits.size();
                ++tr.rounds;
                alice.observe(turn, step.bits);
                bob.observe(turn, step.bits);
                if (opts.record_messages) tr.messages.push_back({turn, std::move(step.bits)});
            }
            turn = other(turn);
        } else {
            if (turn == Party::alice)
                tr.output_alice = step.output;
            else
                tr.output_bob = step.output;
            finished[size_t(turn)] = true;
            if (finished[0] && finished[1]) {
                if (tr.output_alice != tr.output_bob)
                    throw ProtocolError("protocol contract: outputs disagree (" + std::to_string(tr.output_alice) +
                                        " vs " + std::to_string(tr.output_bob) + ")");
                if (recorded_bits != tr.bits_alice + tr.bits_bob)
                    throw ProtocolError("accounting: message lengths do not sum to recorded bits");
                return tr;
            }
            turn = other(turn);
        }
    }
    throw ProtocolError("nontermination: step limit exceeded (" + std::to_string(limit) + ")");
}

}  // namespace tcc
