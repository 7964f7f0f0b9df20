#include "tcc/cis.hpp"

#include <algorithm>

namespace tcc {

void CISInstance::validate() const {
    for (int v : clique) check_vertex(graph.n(), v);
    for (int v : indep) check_vertex(graph.n(), v);
    if (!is_clique(graph, clique)) throw std::invalid_argument("CISInstance: clique field is not a clique");
    if (!is_independent_set(graph, indep))
        throw std::invalid_argument("CISInstance: indep field is not an independent set");
}

namespace {

enum class CisPhase { bob_move, alice_verdict, alice_move, bob_verdict, echo, done };

// Candidate-halving state machine, mirrored by both parties.
class CisStrategy final : public Strategy {
public:
    CisStrategy(Party me, const CISInstance& inst, CisStats* stats)
        : me_(me), g_(&inst.graph), n_(inst.graph.n()), stats_(stats) {
        mine_ = (me == Party::bob) ? inst.clique : inst.indep;
        in_r_.assign(size_t(n_) + 1, 1);
        in_r_[0] = 0;
        r_size_ = n_;
    }

    void observe(Party, const Bits& bits) override {
        switch (phase_) {
            case CisPhase::bob_move:
                if (bits.at(0)) {
                    candidate_ = decode_label(bits, 1, n_);
                    if (stats_) {
                        ++stats_->announce_rounds;
                        stats_->r_sizes.push_back(r_size_);
                    }
                    phase_ = CisPhase::alice_verdict;
                } else {
                    phase_ = CisPhase::alice_move;
                }
                break;
            case CisPhase::alice_verdict:
                if (bits.at(0)) {
                    answer_ = candidate_;
                    echo_sender_ = Party::bob;  // Alice spoke last
                    phase_ = CisPhase::echo;
                } else {
                    restrict_to_neighbors(candidate_);
                    phase_ = CisPhase::bob_move;
                }
                break;
            case CisPhase::alice_move:
                if (bits.at(0)) {
                    candidate_ = decode_label(bits, 1, n_);
                    if (stats_) {
                        ++stats_->announce_rounds;
                        stats_->r_sizes.push_back(r_size_);
                    }
                    phase_ = CisPhase::bob_verdict;
                } else {
                    answer_ = 0;  // both passed: no common vertex
                    echo_sender_ = Party::bob;
                    phase_ = CisPhase::echo;
                }
                break;
            case CisPhase::bob_verdict:
                if (bits.at(0)) {
                    answer_ = candidate_;
                    echo_sender_ = Party::alice;  // Bob spoke last
                    phase_ = CisPhase::echo;
                } else {
                    restrict_to_non_neighbors(candidate_);
                    phase_ = CisPhase::bob_move;
                }
                break;
            case CisPhase::echo:
                answer_ = decode_label(bits, 0, n_ + 1) - 1;  // 0 encodes empty
                phase_ = CisPhase::done;
                break;
            case CisPhase::done:
                break;
        }
    }

    Step act() override {
        switch (phase_) {
            case CisPhase::bob_move:
                if (me_ == Party::bob) return Step::send(move_message(/*clique_side=*/true));
                break;
            case CisPhase::alice_verdict:
                if (me_ == Party::alice) return Step::send(verdict_message());
                break;
            case CisPhase::alice_move:
                if (me_ == Party::alice) return Step::send(move_message(/*clique_side=*/false));
                break;
            case CisPhase::bob_verdict:
                if (me_ == Party::bob) return Step::send(verdict_message());
                break;
            case CisPhase::echo:
                if (me_ == echo_sender_) return Step::send(encode_label(answer_ + 1, n_ + 1));
                break;
            case CisPhase::done:
                return Step::finish(answer_);
        }
        return Step::pass();
    }

private:
    // Candidate rule. Clique side: v in C ∩ R with 2*deg_R(v) <= |R|.
    // Independent side: u in I ∩ R with 2*(|R|-1-deg_R(u)) <= |R|.
    int find_candidate(bool clique_side) const {
        for (int v : mine_) {
            if (!in_r_[size_t(v)]) continue;
            int deg = g_->degree_within(v, in_r_);
            int64_t lhs = clique_side ? int64_t(deg) : int64_t(r_size_) - 1 - deg;
            if (2 * lhs <= r_size_) return v;
        }
        return 0;
    }

    Bits move_message(bool clique_side) const {
        int v = find_candidate(clique_side);
        Bits msg;
        msg.push(v != 0);
        if (v != 0) {
            Bits label = encode_label(v, n_);
            for (size_t k = 0; k < label.size(); ++k) msg.push(label.at(k));
        }
        return msg;
    }

    Bits verdict_message() const {
        Bits msg;
        msg.push(std::binary_search(mine_.begin(), mine_.end(), candidate_));
        return msg;
    }

    void restrict_to_neighbors(int v) {
        int64_t next = 0;
        for (int u = 1; u <= n_; ++u) {
            bool keep = in_r_[size_t(u)] && u != v && g_->adjacent(v, u);
            in_r_[size_t(u)] = keep ? 1 : 0;
            if (keep) ++next;
        }
        r_size_ = next;
    }

    void restrict_to_non_neighbors(int u) {
        int64_t next = 0;
        for (int w = 1; w <= n_; ++w) {
            bool keep = in_r_[size_t(w)] && w != u && !g_->adjacent(u, w);
            in_r_[size_t(w)] = keep ? 1 : 0;
            if (keep) ++next;
        }
        r_size_ = next;
    }

    Party me_;
    const UndirectedGraph* g_;
    int n_;
    CisStats* stats_;
    VertexSet mine_;  // sorted private set (clique for Bob, indep for Alice)

    std::vector<char> in_r_;
    int64_t r_size_ = 0;
    CisPhase phase_ = CisPhase::bob_move;
    int candidate_ = 0;
    int answer_ = 0;
    Party echo_sender_ = Party::bob;
};

}  // namespace

CisResult cis_protocol(const CISInstance& inst, const RunOptions& opts) {
    inst.validate();
    CisStats stats;
    CisStrategy alice(Party::alice, inst, &stats);
    CisStrategy bob(Party::bob, inst, nullptr);
    Transcript tr = run_protocol(alice, bob, Party::bob, inst.graph.n(), opts);
    return {int(tr.output_alice), std::move(tr), std::move(stats)};
}

namespace {

// Extract g's induced subgraph on comp (sorted), locally labelled 1..|comp|.
UndirectedGraph extract(const UndirectedGraph& g, const VertexSet& comp) {
    UndirectedGraph sub(int(comp.size()));
    for (size_t a = 0; a < comp.size(); ++a)
        for (size_t b = a + 1; b < comp.size(); ++b)
            if (g.adjacent(comp[a], comp[b])) sub.add_edge(int(a) + 1, int(b) + 1);
    return sub;
}

VertexSet to_local(const VertexSet& s, const VertexSet& comp) {
    VertexSet local;
    for (int v : s) {
        auto it = std::lower_bound(comp.begin(), comp.end(), v);
        if (it != comp.end() && *it == v) local.push_back(int(it - comp.begin()) + 1);
    }
    return local;
}

// Bob's orientation of the complement within the clique's component:
// complement components holding clique vertices get in-degree 0 exactly
// there; cycle-bearing clique-free components get everyone in-degree >= 1;
// tree components are oriented away from their lowest label.
PartialOrientation orient_bob_side(const UndirectedGraph& gbar, const VertexSet& clique_local) {
    PartialOrientation out(gbar.n());
    for (const VertexSet& comp : components(gbar)) {
        UndirectedGraph sub = extract(gbar, comp);
        VertexSet seeds = to_local(clique_local, comp);
        PartialOrientation local(sub.n());
        if (!seeds.empty()) {
            local = orient_from_independent_set(sub, seeds);
        } else if (sub.edge_count() >= sub.n()) {
            local = orient_indeg_positive(sub);
        } else if (sub.edge_count() > 0) {
            local = orient_from_independent_set(sub, {1});  // tree: away from lowest label
        }
        for (size_t a = 0; a < comp.size(); ++a)
            for (size_t b = a + 1; b < comp.size(); ++b) {
                int la = int(a) + 1, lb = int(b) + 1;
                if (!local.is_set(la, lb)) continue;
                if (local.points(la, lb))
                    out.set_direction(comp[a], comp[b]);
                else
                    out.set_direction(comp[b], comp[a]);
            }
    }
    return out;
}

void add_message(Transcript& tr, Party sender, Bits bits) {
    if (bits.empty()) return;
    if (sender == Party::alice)
        tr.bits_alice += bits.size();
    else
        tr.bits_bob += bits.size();
    ++tr.rounds;
    tr.messages.push_back({sender, std::move(bits)});
}

}  // namespace

CisToSrc cis_to_src(const CISInstance& inst) {
    inst.validate();
    CisToSrc r;
    int n = inst.graph.n();

    // Preprocessing, assembled as an explicit transcript.
    // Bob: 1 bit clique-nonempty + component label (its lowest vertex).
    Bits bob1;
    bob1.push(!inst.clique.empty());
    if (inst.clique.empty()) {
        add_message(r.preprocessing, Party::bob, std::move(bob1));
        r.resolved = true;
        r.answer = 0;
        r.preprocessing.output_alice = r.preprocessing.output_bob = 0;
        return r;
    }
    VertexSet comp = component_of(inst.graph, inst.clique.front());
    {
        Bits label = encode_label(comp.front(), n);
        for (size_t k = 0; k < label.size(); ++k) bob1.push(label.at(k));
    }
    add_message(r.preprocessing, Party::bob, std::move(bob1));

    // Alice: restrict her set to the component; 1 bit |x| >= 3, else the
    // short resolution payload (2-bit count + labels).
    VertexSet x = to_local(inst.indep, comp);
    VertexSet x_orig;
    for (int v : inst.indep)
        if (std::binary_search(comp.begin(), comp.end(), v)) x_orig.push_back(v);
    Bits alice1;
    bool big = x_orig.size() >= 3;
    alice1.push(big);
    if (!big) {
        alice1.append_uint(uint64_t(x_orig.size()), 2);
        for (int v : x_orig) {
            Bits label = encode_label(v, n);
            for (size_t k = 0; k < label.size(); ++k) alice1.push(label.at(k));
        }
    }
    add_message(r.preprocessing, Party::alice, std::move(alice1));

    if (!big) {
        int hit = 0;
        for (int v : x_orig)
            if (std::binary_search(inst.clique.begin(), inst.clique.end(), v)) hit = v;
        add_message(r.preprocessing, Party::bob, encode_label(hit + 1, n + 1));
        r.resolved = true;
        r.answer = hit;
        r.preprocessing.output_alice = r.preprocessing.output_bob = hit;
        return r;
    }

    // Main construction on the component.
    UndirectedGraph sub = extract(inst.graph, comp);
    VertexSet clique_local = to_local(inst.clique, comp);
    PartialOrientation oa = orient_from_independent_set(sub, x);
    PartialOrientation ob = orient_bob_side(sub.complement(), clique_local);

    int k = sub.n();
    Tournament t(k);
    EdgePartition p(k);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            if (sub.adjacent(i, j)) {
                t.set_pair_bit(i, j, oa.points(i, j));
                p.set_owner(i, j, Party::alice);
            } else {
                t.set_pair_bit(i, j, ob.points(i, j));
                p.set_owner(i, j, Party::bob);
            }
        }
    r.t = std::move(t);
    r.p = std::move(p);
    r.labels = comp;
    return r;
}

SrcToCis src_to_cis(const Tournament& t, const EdgePartition& p) {
    if (t.n() != p.n()) throw std::invalid_argument("src_to_cis: partition size mismatch");
    int n = t.n();
    SrcToCis r{UndirectedGraph(n), {}, {}};
    std::vector<char> in_a(size_t(n) + 1, 0), in_b(size_t(n) + 1, 0);
    int64_t idx = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++idx) {
            bool fwd = t.pair_bit_by_index(idx);
            int loser = fwd ? j : i;
            if (p.owner_by_index(idx) == Party::alice) {
                r.graph.add_edge(i, j);
                in_a[size_t(loser)] = 1;
            } else {
                in_b[size_t(loser)] = 1;
            }
        }
    for (int v = 1; v <= n; ++v) {
        if (!in_a[size_t(v)]) r.indep.push_back(v);
        if (!in_b[size_t(v)]) r.clique.push_back(v);
    }
    return r;
}

SrcResult src_protocol(const Tournament& t, const EdgePartition& p, const RunOptions& opts) {
    SrcToCis reduced = src_to_cis(t, p);  // local, zero bits
    CisResult cis = cis_protocol({std::move(reduced.graph), std::move(reduced.clique), std::move(reduced.indep)}, opts);
    return {cis.vertex, std::move(cis.tr), std::move(cis.stats)};
}

SrcDecResult src_dec_protocol(const Tournament& t, const EdgePartition& p, const RunOptions& opts) {
    SrcResult r = src_protocol(t, p, opts);
    return {r.source != 0 ? 1 : 0, std::move(r.tr)};
}

}  // namespace tcc
