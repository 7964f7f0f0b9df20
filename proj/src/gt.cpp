#include "tcc/gt.hpp"

#include <bit>

#include "tcc/rng.hpp"

namespace tcc {

GtParams GtParams::for_universe(uint64_t N) {
    if (N == 0) throw std::invalid_argument("GtParams: universe must be positive");
    GtParams p;
    p.m = std::max(1, int(std::bit_width(N)));
    p.h = 2 * ceil_log2(uint64_t(std::max(2, p.m))) + 4;
    p.probes = ceil_log2(uint64_t(p.m) + 1);
    return p;
}

GtSession::GtSession(GtParams params, uint64_t stream_seed) : p_(params), seed_(stream_seed), lo_(0), hi_(p_.m) {}

Party GtSession::next_sender() const {
    if (in_answer_phase_) return Party::alice;
    return awaiting_verdict_ ? Party::bob : Party::alice;
}

uint64_t GtSession::fingerprint(uint64_t operand, int prefix_len) const {
    // parity of <prefix, r_k> for k = 0..h-1, fresh public words per probe
    uint64_t prefix = prefix_len == 0 ? 0 : (operand >> (p_.m - prefix_len));
    uint64_t fp = 0;
    for (int k = 0; k < p_.h; ++k) {
        uint64_t r = derive_seed(seed_, uint64_t(probe_index_), uint64_t(k));
        fp = (fp << 1) | (uint64_t(std::popcount(prefix & r)) & 1);
    }
    return fp;
}

Bits GtSession::next_message(Party sender, uint64_t operand) const {
    Bits msg;
    if (in_answer_phase_) {
        // lo_ == hi_ == length of the longest common prefix (believed)
        if (lo_ == p_.m) {
            msg.push(true);  // x == y, so x >= y
        } else {
            msg.push(((operand >> (p_.m - lo_ - 1)) & 1) != 0);  // differing bit of x decides
        }
        return msg;
    }
    if (sender == Party::alice) {
        msg.append_uint(fingerprint(operand, probe_prefix_len()), p_.h);
    } else {
        msg.push(fingerprint(operand, probe_prefix_len()) == last_fp_);
    }
    return msg;
}

void GtSession::on_message(const Bits& bits) {
    if (in_answer_phase_) {
        answer_ = bits.at(0) ? 1 : 0;
        done_ = true;
        return;
    }
    if (!awaiting_verdict_) {
        last_fp_ = bits.read_uint(0, p_.h);
        awaiting_verdict_ = true;
        return;
    }
    if (lo_ < hi_) {
        int mid = probe_prefix_len();
        if (bits.at(0))
            lo_ = mid;  // prefixes (believed) equal
        else
            hi_ = mid - 1;
    }
    // else: padding probe, no state to update
    awaiting_verdict_ = false;
    ++probe_index_;
    if (probe_index_ >= p_.probes) in_answer_phase_ = true;
}

namespace {

class GtStrategy final : public Strategy {
public:
    GtStrategy(Party me, uint64_t operand, std::shared_ptr<GtSession> session)
        : me_(me), operand_(operand), session_(std::move(session)) {}

    void observe(Party, const Bits& bits) override { session_->on_message(bits); }

    Step act() override {
        if (session_->done()) return Step::finish(session_->answer());
        if (session_->next_sender() != me_) return Step::pass();
        return Step::send(session_->next_message(me_, operand_));
    }

private:
    Party me_;
    uint64_t operand_;
    std::shared_ptr<GtSession> session_;
};

}  // namespace

GtResult gt_protocol(uint64_t x, uint64_t y, uint64_t N, uint64_t public_seed, const RunOptions& opts) {
    if (x < 1 || x > N || y < 1 || y > N) throw std::out_of_range("gt_protocol: operands must lie in [1, N]");
    GtParams params = GtParams::for_universe(N);
    // each party drives its own session copy off the shared messages
    auto sa = std::make_shared<GtSession>(params, public_seed);
    auto sb = std::make_shared<GtSession>(params, public_seed);
    GtStrategy alice(Party::alice, x, sa);
    GtStrategy bob(Party::bob, y, sb);
    Transcript tr = run_protocol(alice, bob, Party::alice, params.m + 4, opts);
    return {int(tr.output_alice), std::move(tr)};
}

}  // namespace tcc
