#include <algorithm>

#include "doctest.h"
#include "tcc/fooling.hpp"
#include "tcc/gssigma.hpp"
#include "tcc/king_protocol.hpp"
#include "tcc/pmf.hpp"
#include "tcc/rng.hpp"
#include "tcc/verify.hpp"

using namespace tcc;

namespace {

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> ranks(size_t(n), 0);
    for (int k = 0; k < n; ++k) ranks[size_t(k)] = k + 1;
    for (int k = n - 1; k > 0; --k) std::swap(ranks[size_t(k)], ranks[size_t(rng.below(uint64_t(k) + 1))]);
    return Permutation{ranks};
}

}  // namespace

TEST_CASE("pmf evaluation") {
    Permutation sigma{{4, 3, 2, 1, 5}};
    CHECK(pmf_eval({{}, sigma}) == 0);  // empty set: bottom
    CHECK(pmf_eval({{2, 5}, Permutation{{3, 4, 2, 5, 1}}}) == 2);
    CHECK(pmf_eval({{1, 2, 3, 4, 5}, sigma}) == 5);  // sigma^{-1}(n)
}

TEST_CASE("pmf and transitive index-king are the same problem") {
    // sigma = identity on n=3, S={1,3}: the tournament is 3 -> 2 -> 1 and the
    // king of G|S is 3
    PMFInstance inst{{1, 3}, Permutation::identity(3)};
    auto [s, t] = pmf_to_tindexking(inst);
    CHECK(t.points(3, 2));
    CHECK(t.points(2, 1));
    CHECK(t.points(3, 1));
    Induced sub = induced(t, s);
    VertexSet kings = all_kings(sub.sub);
    REQUIRE(kings.size() == 1);
    CHECK(sub.labels[size_t(kings.front() - 1)] == 3);
    CHECK(pmf_eval(inst) == 3);

    // exhaustive: round-trip identity and answer preservation
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> perm(size_t(n), 0);
        for (int k = 0; k < n; ++k) perm[size_t(k)] = k + 1;
        do {
            Permutation sigma{perm};
            auto [s2, tt] = pmf_to_tindexking({{}, sigma});
            PMFInstance back = tindexking_to_pmf(s2, tt);
            CHECK(back.sigma.ranks() == sigma.ranks());
            for (uint64_t sm = 1; sm < (uint64_t(1) << n); ++sm) {
                VertexSet set;
                for (int v = 1; v <= n; ++v)
                    if ((sm >> (v - 1)) & 1) set.push_back(v);
                PMFInstance in2{set, sigma};
                auto [s3, t3] = pmf_to_tindexking(in2);
                Induced sub3 = induced(t3, s3);
                VertexSet k3 = all_kings(sub3.sub);
                REQUIRE(k3.size() == 1);
                CHECK(sub3.labels[size_t(k3.front() - 1)] == pmf_eval(in2));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    Tournament cyc(3);
    cyc.set_direction(1, 2);
    cyc.set_direction(2, 3);
    cyc.set_direction(3, 1);
    CHECK_THROWS_AS(tindexking_to_pmf({1}, cyc), std::invalid_argument);
}

TEST_CASE("disjointness reduces to pmf") {
    // Sa={1,3}, T={2}: sigma = (1,3,2), answer 3, disjoint
    DisjReduction red = disj_to_pmf({1, 3}, {2}, 3);
    CHECK(red.inst.sigma.ranks() == std::vector<int>{1, 3, 2});
    int k = pmf_eval(red.inst);
    CHECK(k == 3);
    CHECK(red.decode(k) == 1);

    DisjReduction empty = disj_to_pmf({}, {1, 2}, 3);
    CHECK(pmf_eval(empty.inst) == 0);
    CHECK(empty.decode(0) == 1);

    for (uint64_t am = 0; am < 64; ++am)
        for (uint64_t bm = 0; bm < 64; ++bm) {
            VertexSet sa, tb;
            for (int v = 1; v <= 6; ++v) {
                if ((am >> (v - 1)) & 1) sa.push_back(v);
                if ((bm >> (v - 1)) & 1) tb.push_back(v);
            }
            DisjReduction r = disj_to_pmf(sa, tb, 6);
            CHECK(r.decode(pmf_eval(r.inst)) == ((am & bm) == 0 ? 1 : 0));
        }
}

TEST_CASE("the three-copy tournament has exactly the three predicted kings") {
    GSSigma g = build_gssigma(2, {1}, Permutation::identity(2));
    CHECK(g.t.n() == 6);
    CHECK(all_kings(g.t) == VertexSet{1, 3, 5});  // copies of element 1
    CHECK(max_out_degree_set(g.t) == VertexSet{1, 3, 5});

    CHECK_THROWS_AS(build_gssigma(2, {}, Permutation::identity(2)), std::invalid_argument);

    for (int n = 1; n <= 4; ++n) {
        std::vector<int> perm(size_t(n), 0);
        for (int k = 0; k < n; ++k) perm[size_t(k)] = k + 1;
        do {
            Permutation sigma{perm};
            for (uint64_t sm = 1; sm < (uint64_t(1) << n); ++sm) {
                VertexSet s;
                for (int v = 1; v <= n; ++v)
                    if ((sm >> (v - 1)) & 1) s.push_back(v);
                GSSigma gs = build_gssigma(n, s, sigma);
                VertexSet predicted = gs.predicted_kings();
                std::sort(predicted.begin(), predicted.end());
                CHECK(all_kings(gs.t) == predicted);
                CHECK(max_out_degree_set(gs.t) == predicted);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // random spot checks at n = 32
    Rng rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 32;
        Permutation sigma = random_permutation(n, rng);
        VertexSet s;
        for (int v = 1; v <= n; ++v)
            if (rng.next_bit()) s.push_back(v);
        if (s.empty()) s.push_back(1);
        GSSigma gs = build_gssigma(n, s, sigma);
        VertexSet predicted = gs.predicted_kings();
        std::sort(predicted.begin(), predicted.end());
        CHECK(all_kings(gs.t) == predicted);
        CHECK(max_out_degree_set(gs.t) == predicted);
    }
}

TEST_CASE("the canonical partition splits by edge type") {
    GSSigma gs = build_gssigma(3, {2}, Permutation::identity(3));
    for (int u = 1; u <= 9; ++u)
        for (int w = u + 1; w <= 9; ++w) {
            bool same_copy = gs.copy_of(u) == gs.copy_of(w);
            CHECK(gs.p.owner(u, w) == (same_copy ? Party::bob : Party::alice));
        }
}

TEST_CASE("disjointness pipeline through the king protocol") {
    for (uint64_t am = 0; am < 64; ++am)
        for (uint64_t bm = 0; bm < 64; ++bm) {
            VertexSet sa, tb;
            for (int v = 1; v <= 6; ++v) {
                if ((am >> (v - 1)) & 1) sa.push_back(v);
                if ((bm >> (v - 1)) & 1) tb.push_back(v);
            }
            int got;
            if (sa.empty()) {
                got = 1;  // both parties know S is empty
            } else {
                DisjReduction red = disj_to_pmf(sa, tb, 6);
                GSSigma gs = build_gssigma(6, red.inst.s, red.inst.sigma);
                KingResult kr = king_protocol(gs.t, gs.p);
                got = red.decode(gs.element_of(kr.king));
            }
            CHECK(got == ((am & bm) == 0 ? 1 : 0));
        }
}

TEST_CASE("matched fooling inputs make vertex 1 the unique argmax") {
    // n=8, sigma identity: d+(1) = 5, everyone else at most 4
    FoolingInput f = fooling_input(8, {2, 3, 4});
    std::vector<int> d = out_degrees(f.t);
    CHECK(d[0] == 5);
    for (int v = 2; v <= 8; ++v) CHECK(d[size_t(v - 1)] <= 4);
    CHECK(max_out_degree_set(f.t) == VertexSet{1});

    // partition: within-side pairs to Alice, crossing pairs to Bob
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j)
            CHECK(f.p.owner(i, j) == (((i <= 4) == (j <= 4)) ? Party::alice : Party::bob));

    CHECK_THROWS_AS(fooling_input(6, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(fooling_input(9, {2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(fooling_input(8, {2, 2, 4}), std::invalid_argument);

    Rng rng(5150);
    for (int n : {8, 12, 16}) {
        int m = n / 2 - 1;
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> sigma(size_t(m), 0);
            for (int k = 0; k < m; ++k) sigma[size_t(k)] = k + 2;
            for (int k = m - 1; k > 0; --k) std::swap(sigma[size_t(k)], sigma[size_t(rng.below(uint64_t(k) + 1))]);
            FoolingInput fi = fooling_input(n, sigma);
            CHECK(max_out_degree_set(fi.t) == VertexSet{1});
            CHECK(out_degrees(fi.t)[0] == n / 2 + 1);
        }
    }
}

TEST_CASE("cross inputs with a rank gap demote vertex 1") {
    // sigma = identity, sigma' swaps so that sigma'(2) - sigma(2) = 2
    std::vector<int> sigma{2, 3, 4}, sigma_prime{4, 3, 2};
    Tournament cross = fooling_cross(8, sigma, sigma_prime);
    std::vector<int> d = out_degrees(cross);
    CHECK(d[size_t(2 - 1)] == 4 - 2 + 4);  // n/2 - sigma(2) + sigma'(2) = 6
    CHECK(d[0] == 5);
    VertexSet mod = max_out_degree_set(cross);
    CHECK(!std::binary_search(mod.begin(), mod.end(), 1));
}

TEST_CASE("greedy fooling set: pairwise far and jointly unanswerable") {
    auto set8 = greedy_fooling_set(8);
    CHECK(set8.size() >= fooling_size_floor(8));
    CHECK(set8.size() == 3);  // scan of the 6 permutations of {2,3,4}

    for (int n : {8, 12}) {
        auto set = greedy_fooling_set(n);
        if (n == 12) CHECK(set.size() >= 2);
        for (size_t a = 0; a < set.size(); ++a)
            for (size_t b = a + 1; b < set.size(); ++b) {
                bool far = false;
                for (size_t k = 0; k < set[a].size(); ++k)
                    if (std::abs(set[a][k] - set[b][k]) >= 2) far = true;
                CHECK(far);
                VertexSet m_ab = max_out_degree_set(fooling_cross(n, set[a], set[b]));
                VertexSet m_ba = max_out_degree_set(fooling_cross(n, set[b], set[a]));
                bool demoted = !std::binary_search(m_ab.begin(), m_ab.end(), 1) ||
                               !std::binary_search(m_ba.begin(), m_ba.end(), 1);
                CHECK(demoted);
            }
    }
}
