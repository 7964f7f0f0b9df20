#include "tcc/king_protocol.hpp"

#include <algorithm>
#include <bit>

namespace tcc {

namespace {

enum class Phase { announce, respond, ship, echo_king, echo_empty, done };

// Mirrored public state plus one party's private view. Both strategies run
// the same transitions off the observed messages, so their public halves
// never diverge. Private direction bits are only ever read for owned pairs.
class KingStrategy final : public Strategy {
public:
    KingStrategy(Party me, const Tournament& t, const EdgePartition& p, KingRunStats* stats)
        : me_(me), n_(t.n()), words_((t.n() + 63) / 64), stats_(stats) {
        owner_rows_[0].assign(size_t(n_) * words_, 0);
        owner_rows_[1].assign(size_t(n_) * words_, 0);
        my_out_.assign(size_t(n_) * words_, 0);
        ship_rows_.assign(size_t(n_) * words_, 0);
        int64_t idx = 0;
        for (int i = 1; i <= n_; ++i) {
            for (int j = i + 1; j <= n_; ++j, ++idx) {
                Party o = p.owner_by_index(idx);
                set_bit(owner_rows_[size_t(o)], i, j);
                set_bit(owner_rows_[size_t(o)], j, i);
                if (o == me_) {
                    if (t.pair_bit_by_index(idx))
                        set_bit(my_out_, i, j);
                    else
                        set_bit(my_out_, j, i);
                }
            }
        }
        s_.resize(size_t(n_), 0);
        for (int v = 1; v <= n_; ++v) s_[size_t(v - 1)] = v;
        smask_.assign(size_t(words_), 0);
        for (int v = 1; v <= n_; ++v) smask_[size_t((v - 1) >> 6)] |= uint64_t(1) << ((v - 1) & 63);
        decide_phase();
    }

    void observe(Party, const Bits& bits) override {
        switch (phase_) {
            case Phase::announce: {
                int width = ceil_log2(uint64_t(s_.size()));
                v_ = s_[size_t(bits.read_uint(0, width))];
                in_acc_.assign(size_t(words_), 0);
                absorb_indicator(bits, size_t(width));
                phase_ = Phase::respond;
                break;
            }
            case Phase::respond: {
                absorb_indicator(bits, 0);
                shrink_to_joint_in_neighbourhood();
                break;
            }
            case Phase::ship: {
                absorb_ship(bits);
                enter_echo_king();
                break;
            }
            case Phase::echo_king:
            case Phase::echo_empty: {
                answer_ = decode_label(bits, 0, n_);
                phase_ = Phase::done;
                break;
            }
            case Phase::done:
                break;
        }
    }

    Step act() override {
        switch (phase_) {
            case Phase::announce:
                if (me_ == b_) return Step::send(announce_message());
                break;
            case Phase::respond:
                if (me_ != b_) return Step::send(indicator_message());
                break;
            case Phase::ship:
                if (me_ == shipper_) return Step::send(ship_message());
                break;
            case Phase::echo_king:
                if (me_ != shipper_) return Step::send(encode_label(king_, n_));
                break;
            case Phase::echo_empty:
                if (me_ == b_) return Step::send(encode_label(answer_, n_));
                break;
            case Phase::done:
                return Step::finish(answer_);
        }
        return Step::pass();
    }

private:
    void set_bit(std::vector<uint64_t>& rows, int v, int u) {
        rows[size_t(v - 1) * words_ + ((u - 1) >> 6)] |= uint64_t(1) << ((u - 1) & 63);
    }
    const uint64_t* row(const std::vector<uint64_t>& rows, int v) const {
        return rows.data() + size_t(v - 1) * words_;
    }
    int popcount_and(const uint64_t* a, const uint64_t* b) const {
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
        return c;
    }

    int64_t live_count(Party who) const {
        int64_t twice = 0;
        for (int v : s_) twice += popcount_and(row(owner_rows_[size_t(who)], v), smask_.data());
        return twice / 2;
    }

    // Called whenever S changes: records stats, picks the next phase.
    void decide_phase() {
        if (stats_) stats_->s_sizes.push_back(int(s_.size()));
        live_[0] = live_count(Party::alice);
        live_[1] = live_count(Party::bob);
        if (live_[0] > n_ && live_[1] > n_) {
            b_ = (live_[0] >= live_[1]) ? Party::alice : Party::bob;
            phase_ = Phase::announce;
            if (stats_) ++stats_->loop_rounds;
            return;
        }
        shipper_ = (live_[0] <= n_) ? Party::alice : Party::bob;
        if (stats_) stats_->terminal_ship_bits = int(live_[size_t(shipper_)]);
        phase_ = Phase::ship;
        if (live_[size_t(shipper_)] == 0) enter_echo_king();  // nothing to ship
    }

    // Largest own-side out-degree within S, lowest label on ties.
    int my_best_vertex() const {
        int best = -1, best_v = 0;
        for (int v : s_) {
            int d = popcount_and(row(my_out_, v), smask_.data());
            if (d > best) {
                best = d;
                best_v = v;
            }
        }
        return best_v;
    }

    Bits announce_message() const {
        int mine = my_best_vertex();
        Bits msg;
        int width = ceil_log2(uint64_t(s_.size()));
        size_t pos = size_t(std::lower_bound(s_.begin(), s_.end(), mine) - s_.begin());
        msg.append_uint(uint64_t(pos), width);
        append_indicator(msg, mine);
        return msg;
    }

    Bits indicator_message() const {
        Bits msg;
        append_indicator(msg, v_);
        return msg;
    }

    // |S| bits: positions of my in-neighbours of v within sorted S.
    void append_indicator(Bits& msg, int v) const {
        const uint64_t* own = row(owner_rows_[size_t(me_)], v);
        const uint64_t* out = row(my_out_, v);
        for (int u : s_) {
            int b = u - 1;
            bool owned = (own[b >> 6] >> (b & 63)) & 1;
            bool outgoing = (out[b >> 6] >> (b & 63)) & 1;
            msg.push(owned && !outgoing);
        }
    }

    void absorb_indicator(const Bits& bits, size_t pos) {
        for (size_t k = 0; k < s_.size(); ++k)
            if (bits.at(pos + k)) {
                int b = s_[k] - 1;
                in_acc_[size_t(b >> 6)] |= uint64_t(1) << (b & 63);
            }
    }

    void shrink_to_joint_in_neighbourhood() {
        VertexSet next;
        for (int u : s_) {
            int b = u - 1;
            if ((in_acc_[size_t(b >> 6)] >> (b & 63)) & 1) next.push_back(u);
        }
        if (next.empty()) {
            // v beats everything left: it is the king of G|S
            answer_ = v_;
            phase_ = Phase::echo_empty;
            return;
        }
        s_ = std::move(next);
        std::fill(smask_.begin(), smask_.end(), 0);
        for (int u : s_) smask_[size_t((u - 1) >> 6)] |= uint64_t(1) << ((u - 1) & 63);
        decide_phase();
    }

    // Direction bits of the shipper's live pairs, canonical pair order.
    Bits ship_message() const {
        Bits msg;
        msg.reserve(size_t(live_[size_t(me_)]));
        const auto& own = owner_rows_[size_t(me_)];
        for (size_t a = 0; a < s_.size(); ++a)
            for (size_t c = a + 1; c < s_.size(); ++c) {
                int i = s_[a], j = s_[c];
                if ((row(own, i)[(j - 1) >> 6] >> ((j - 1) & 63)) & 1) {
                    bool iout = (row(my_out_, i)[(j - 1) >> 6] >> ((j - 1) & 63)) & 1;
                    msg.push(iout);
                }
            }
        return msg;
    }

    void absorb_ship(const Bits& bits) {
        const auto& shipper_owned = owner_rows_[size_t(shipper_)];
        size_t pos = 0;
        for (size_t a = 0; a < s_.size(); ++a)
            for (size_t c = a + 1; c < s_.size(); ++c) {
                int i = s_[a], j = s_[c];
                if ((row(shipper_owned, i)[(j - 1) >> 6] >> ((j - 1) & 63)) & 1) {
                    if (bits.at(pos++))
                        set_bit(ship_rows_, i, j);
                    else
                        set_bit(ship_rows_, j, i);
                }
            }
    }

    // Receiver now knows all of G|S; a maximum-out-degree vertex is a king.
    void enter_echo_king() {
        if (me_ != shipper_) {
            int best = -1;
            for (int v : s_) {
                int d = popcount_and(row(my_out_, v), smask_.data()) +
                        popcount_and(row(ship_rows_, v), smask_.data());
                if (d > best) {
                    best = d;
                    king_ = v;
                }
            }
        }
        phase_ = Phase::echo_king;
        if (ceil_log2(uint64_t(n_)) == 0) {  // n == 1: the answer is forced
            answer_ = 1;
            phase_ = Phase::done;
        }
    }

    Party me_;
    int n_, words_;
    KingRunStats* stats_;

    std::vector<uint64_t> owner_rows_[2];
    std::vector<uint64_t> my_out_;
    std::vector<uint64_t> ship_rows_;

    VertexSet s_;
    std::vector<uint64_t> smask_;
    int64_t live_[2] = {0, 0};
    Phase phase_ = Phase::done;
    Party b_ = Party::alice;
    Party shipper_ = Party::alice;
    int v_ = 0;
    std::vector<uint64_t> in_acc_;
    int king_ = 0;
    int answer_ = 0;
};

}  // namespace

KingResult king_protocol(const Tournament& t, const EdgePartition& p, const RunOptions& opts) {
    if (t.n() != p.n()) throw std::invalid_argument("king_protocol: partition size mismatch");
    KingRunStats stats;
    KingStrategy alice(Party::alice, t, p, &stats);
    KingStrategy bob(Party::bob, t, p, nullptr);
    Transcript tr = run_protocol(alice, bob, Party::alice, t.n(), opts);
    return {int(tr.output_alice), std::move(tr), std::move(stats)};
}

}  // namespace tcc
