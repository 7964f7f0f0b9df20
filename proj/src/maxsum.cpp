#include "tcc/maxsum.hpp"

#include <algorithm>
#include <bit>
#include <memory>

#include "tcc/gt.hpp"
#include "tcc/noisy_max.hpp"
#include "tcc/rng.hpp"

namespace tcc {

namespace {

int value_bound_for(const DegreeVector& a, const DegreeVector& b) {
    int bound = int(a.size());
    for (int v : a) bound = std::max(bound, v + 1);
    for (int v : b) bound = std::max(bound, v + 1);
    return bound;
}

void validate_vectors(const DegreeVector& a, const DegreeVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("maxsum: vector length mismatch");
    if (a.empty()) throw std::invalid_argument("maxsum: empty vectors");
    for (int v : a)
        if (v < 0) throw std::invalid_argument("maxsum: negative entry");
    for (int v : b)
        if (v < 0) throw std::invalid_argument("maxsum: negative entry");
}

int direct_argmax(const DegreeVector& a, const DegreeVector& b) {
    int best = 0;
    for (size_t k = 1; k < a.size(); ++k)
        if (a[k] + b[k] > a[size_t(best)] + b[size_t(best)]) best = int(k);
    return best + 1;
}

// Alice dumps her vector, Bob answers the argmax.
class MaxsumDetStrategy final : public Strategy {
public:
    MaxsumDetStrategy(Party me, const DegreeVector& a, const DegreeVector& b, int width)
        : me_(me), mine_(me == Party::alice ? a : b), n_(int(a.size())), width_(width) {}

    void observe(Party, const Bits& bits) override {
        if (phase_ == 0) {
            if (me_ == Party::bob) {
                DegreeVector a(size_t(n_), 0);
                for (int k = 0; k < n_; ++k) a[size_t(k)] = int(bits.read_uint(size_t(k) * width_, width_));
                answer_ = direct_argmax(a, mine_);
            }
            phase_ = 1;
        } else if (phase_ == 1) {
            answer_ = decode_label(bits, 0, n_);
            phase_ = 2;
        }
    }

    Step act() override {
        if (n_ == 1) return Step::finish(1);
        if (phase_ == 0 && me_ == Party::alice) {
            Bits dump;
            dump.reserve(size_t(n_) * width_);
            for (int v : mine_) dump.append_uint(uint64_t(v), width_);
            return Step::send(std::move(dump));
        }
        if (phase_ == 1 && me_ == Party::bob) return Step::send(encode_label(answer_, n_));
        if (phase_ == 2) return Step::finish(answer_);
        return Step::pass();
    }

private:
    Party me_;
    DegreeVector mine_;
    int n_, width_;
    int phase_ = 0;
    int answer_ = 0;
};

// Bracket of GT sub-sessions; both parties mirror the bracket and every GT
// session, so match outcomes are common knowledge as they happen.
class MaxsumRandStrategy final : public Strategy {
public:
    MaxsumRandStrategy(Party me, const DegreeVector& a, const DegreeVector& b, int value_bound, uint64_t seed)
        : me_(me), mine_(me == Party::alice ? a : b), n_(int(a.size())), off_(value_bound), seed_(seed) {
        params_.m = std::max(16, int(std::bit_width(uint64_t(2 * off_))));
        params_.h = 2 * ceil_log2(uint64_t(params_.m)) + 4;
        params_.probes = ceil_log2(uint64_t(params_.m) + 1);
        alive_.resize(size_t(n_), 0);
        for (int i = 0; i < n_; ++i) alive_[size_t(i)] = i + 1;
        if (n_ > 1) start_session();
    }

    void observe(Party, const Bits& bits) override {
        if (echo_phase_) {
            answer_ = decode_label(bits, 0, n_);
            done_ = true;
            return;
        }
        session_->on_message(bits);
        if (!session_->done()) return;
        if (session_->answer() == 1) ++votes_a_;  // s_i >= s_j: vote for the lower slot
        ++votes_cast_;
        int t = bracket_votes(height_);
        if (votes_cast_ < t) {
            start_session();
            return;
        }
        survivors_.push_back(2 * votes_a_ >= t ? alive_[slot_] : alive_[slot_ + 1]);
        slot_ += 2;
        votes_a_ = votes_cast_ = 0;
        if (slot_ + 1 >= alive_.size()) {
            if (alive_.size() % 2) survivors_.push_back(alive_.back());
            alive_ = std::move(survivors_);
            survivors_.clear();
            slot_ = 0;
            ++height_;
        }
        if (alive_.size() == 1) {
            winner_ = alive_.front();
            echo_phase_ = true;
        } else {
            start_session();
        }
    }

    Step act() override {
        if (n_ == 1) return Step::finish(1);
        if (done_) return Step::finish(answer_);
        if (echo_phase_) {
            if (me_ == Party::alice) return Step::send(encode_label(winner_, n_));
            return Step::pass();
        }
        if (session_->next_sender() != me_) return Step::pass();
        return Step::send(session_->next_message(me_, operand()));
    }

private:
    void start_session() {
        session_ = std::make_unique<GtSession>(params_, derive_seed(seed_, 0x6d7372ULL, comparison_index_++));
    }

    // GT operands for the current match (i, j): Alice compares a_i - a_j + K,
    // Bob b_j - b_i + K, both in [1, 2K-1].
    uint64_t operand() const {
        int i = alive_[slot_], j = alive_[slot_ + 1];
        int d = (me_ == Party::alice) ? mine_[size_t(i - 1)] - mine_[size_t(j - 1)]
                                      : mine_[size_t(j - 1)] - mine_[size_t(i - 1)];
        return uint64_t(d + off_);
    }

    Party me_;
    DegreeVector mine_;
    int n_, off_;
    uint64_t seed_;
    GtParams params_;

    std::vector<int> alive_, survivors_;
    size_t slot_ = 0;
    int height_ = 0;
    int votes_a_ = 0, votes_cast_ = 0;
    uint64_t comparison_index_ = 0;
    std::unique_ptr<GtSession> session_;
    bool echo_phase_ = false;
    int winner_ = 0;
    bool done_ = false;
    int answer_ = 0;
};

}  // namespace

MaxsumResult maxsum_det(const DegreeVector& a, const DegreeVector& b, const RunOptions& opts) {
    validate_vectors(a, b);
    int width = ceil_log2(uint64_t(value_bound_for(a, b)));
    MaxsumDetStrategy alice(Party::alice, a, b, width);
    MaxsumDetStrategy bob(Party::bob, a, b, width);
    Transcript tr = run_protocol(alice, bob, Party::alice, int(a.size()), opts);
    return {int(tr.output_alice), std::move(tr)};
}

MaxsumResult maxsum_rand(const DegreeVector& a, const DegreeVector& b, uint64_t public_seed,
                         const RunOptions& opts) {
    validate_vectors(a, b);
    int bound = value_bound_for(a, b);
    MaxsumRandStrategy alice(Party::alice, a, b, bound, public_seed);
    MaxsumRandStrategy bob(Party::bob, a, b, bound, public_seed);
    RunOptions run = opts;
    if (run.max_steps == 0) {
        // ~33n GT calls, each 2*probes+1 messages plus passes
        GtParams p = GtParams::for_universe(uint64_t(2 * bound));
        run.max_steps = noisy_max_call_bound(int(a.size())) * uint64_t(8 * p.probes + 16) + 256;
    }
    Transcript tr = run_protocol(alice, bob, Party::alice, int(a.size()), run);
    return {int(tr.output_alice), std::move(tr)};
}

std::pair<DegreeVector, DegreeVector> mod_degree_vectors(const Tournament& t, const EdgePartition& p) {
    if (t.n() != p.n()) throw std::invalid_argument("mod_degree_vectors: partition size mismatch");
    DegreeVector a(size_t(t.n()), 0), b(size_t(t.n()), 0);
    int64_t idx = 0;
    for (int i = 1; i <= t.n(); ++i)
        for (int j = i + 1; j <= t.n(); ++j, ++idx) {
            int winner = t.pair_bit_by_index(idx) ? i : j;
            if (p.owner_by_index(idx) == Party::alice)
                ++a[size_t(winner - 1)];
            else
                ++b[size_t(winner - 1)];
        }
    return {std::move(a), std::move(b)};
}

MaxsumResult mod_protocol(const Tournament& t, const EdgePartition& p, ModMode mode, uint64_t public_seed,
                          const RunOptions& opts) {
    auto [a, b] = mod_degree_vectors(t, p);
    return mode == ModMode::det ? maxsum_det(a, b, opts) : maxsum_rand(a, b, public_seed, opts);
}

}  // namespace tcc
