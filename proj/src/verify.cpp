#include "tcc/verify.hpp"

#include <algorithm>
#include <functional>

#include "tcc/cis.hpp"
#include "tcc/fooling.hpp"
#include "tcc/gssigma.hpp"
#include "tcc/king_protocol.hpp"
#include "tcc/pmf.hpp"
#include "tcc/query_king.hpp"
#include "tcc/rank_game.hpp"
#include "tcc/tournament.hpp"
#include "tcc/undirected.hpp"

namespace tcc {

void for_each_tournament(int n, const std::function<void(const Tournament&)>& fn) {
    int64_t pairs = pair_count(n);
    if (pairs > 20) throw std::invalid_argument("for_each_tournament: too many pairs to enumerate");
    for (uint64_t mask = 0; mask < (uint64_t(1) << pairs); ++mask) {
        Tournament t(n);
        for (int64_t k = 0; k < pairs; ++k) t.set_pair_bit_by_index(k, (mask >> k) & 1);
        fn(t);
    }
}

namespace {

void note_failure(SuiteResult& r, const std::string& what) {
    ++r.failed;
    if (r.notes.size() < 20) r.notes.push_back(what);
}

bool equal_sets(const VertexSet& a, const VertexSet& b) { return a == b; }

}  // namespace

SuiteResult verify_kings(int max_n) {
    SuiteResult r;
    r.name = "kings";
    for (int n = 1; n <= max_n; ++n) {
        for_each_tournament(n, [&](const Tournament& t) {
            ++r.checked;
            VertexSet kings = all_kings(t);
            if (kings.empty()) note_failure(r, "no king at n=" + std::to_string(n));
            if (kings.size() == 2) note_failure(r, "exactly two kings at n=" + std::to_string(n));
            VertexSet mod = max_out_degree_set(t);
            if (!std::includes(kings.begin(), kings.end(), mod.begin(), mod.end()))
                note_failure(r, "max-out-degree vertex is not a king at n=" + std::to_string(n));
            int s = source_of(t);
            if (s != 0 && !(kings.size() == 1 && kings.front() == s))
                note_failure(r, "source is not the unique king at n=" + std::to_string(n));
            // kings of the induced in-neighbourhood are kings of t
            for (int v = 1; v <= n; ++v) {
                Neighborhoods nb = neighborhoods(t, v);
                if (nb.in.empty()) continue;
                Induced sub = induced(t, nb.in);
                for (int u : all_kings(sub.sub))
                    if (!std::binary_search(kings.begin(), kings.end(), sub.labels[size_t(u - 1)]))
                        note_failure(r, "in-neighbourhood king not a king at n=" + std::to_string(n));
            }
        });
    }
    return r;
}

SuiteResult verify_source_cis(int max_n) {
    SuiteResult r;
    r.name = "source-cis";
    // direction 1: CIS -> SRC on every connected graph and valid pair
    for (int n = 1; n <= max_n; ++n) {
        int64_t pairs = pair_count(n);
        for (uint64_t mask = 0; mask < (uint64_t(1) << pairs); ++mask) {
            UndirectedGraph g(n);
            for (int64_t k = 0; k < pairs; ++k)
                if ((mask >> k) & 1) {
                    auto [i, j] = pair_at(n, k);
                    g.add_edge(i, j);
                }
            if (!is_connected(g)) continue;
            for (uint64_t cm = 0; cm < (uint64_t(1) << n); ++cm) {
                VertexSet clique;
                for (int v = 1; v <= n; ++v)
                    if ((cm >> (v - 1)) & 1) clique.push_back(v);
                if (!is_clique(g, clique)) continue;
                for (uint64_t im = 0; im < (uint64_t(1) << n); ++im) {
                    VertexSet indep;
                    for (int v = 1; v <= n; ++v)
                        if ((im >> (v - 1)) & 1) indep.push_back(v);
                    if (!is_independent_set(g, indep)) continue;
                    ++r.checked;
                    VertexSet common;
                    std::set_intersection(clique.begin(), clique.end(), indep.begin(), indep.end(),
                                          std::back_inserter(common));
                    int expected = common.empty() ? 0 : common.front();
                    CISInstance inst{g, clique, indep};
                    CisResult cis = cis_protocol(inst);
                    if (cis.vertex != expected) note_failure(r, "cis_protocol mismatch at n=" + std::to_string(n));
                    CisToSrc red = cis_to_src(inst);
                    int got;
                    if (red.resolved) {
                        got = red.answer;
                    } else {
                        int s = source_of(red.t);
                        got = s == 0 ? 0 : red.labels[size_t(s - 1)];
                    }
                    if (got != expected) note_failure(r, "cis_to_src mismatch at n=" + std::to_string(n));
                }
            }
        }
    }
    // direction 2: SRC -> CIS on every tournament, a few partitions each
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        for_each_tournament(n, [&](const Tournament& t) {
            for (uint64_t pi = 0; pi < 8; ++pi) {
                ++r.checked;
                EdgePartition p = random_partition(n, 0xabcd00 + pi);
                SrcToCis red = src_to_cis(t, p);
                VertexSet common;
                std::set_intersection(red.clique.begin(), red.clique.end(), red.indep.begin(), red.indep.end(),
                                      std::back_inserter(common));
                int expected = source_of(t);
                int got = common.empty() ? 0 : common.front();
                if (got != expected) note_failure(r, "src_to_cis mismatch at n=" + std::to_string(n));
                SrcResult sp = src_protocol(t, p);
                if (sp.source != expected) note_failure(r, "src_protocol mismatch at n=" + std::to_string(n));
            }
        });
    }
    return r;
}

SuiteResult verify_gssigma(int max_n) {
    SuiteResult r;
    r.name = "gssigma";
    for (int n = 1; n <= max_n; ++n) {
        uint64_t at_n = 0, ok_at_n = 0;
        std::vector<int> perm(size_t(n), 0);
        for (int k = 0; k < n; ++k) perm[size_t(k)] = k + 1;
        do {
            Permutation sigma{perm};
            for (uint64_t sm = 1; sm < (uint64_t(1) << n); ++sm) {
                VertexSet s;
                for (int v = 1; v <= n; ++v)
                    if ((sm >> (v - 1)) & 1) s.push_back(v);
                ++r.checked;
                ++at_n;
                GSSigma g = build_gssigma(n, s, sigma);
                VertexSet predicted = g.predicted_kings();
                std::sort(predicted.begin(), predicted.end());
                bool good = equal_sets(all_kings(g.t), predicted) && equal_sets(max_out_degree_set(g.t), predicted);
                if (good)
                    ++ok_at_n;
                else
                    note_failure(r, "kings or max-out-degree set differ from prediction at n=" + std::to_string(n));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(ok_at_n) + "/" + std::to_string(at_n) +
                          " pass");
    }
    return r;
}

SuiteResult verify_fooling() {
    SuiteResult r;
    r.name = "fooling";
    for (int n : {8, 12}) {
        auto set = greedy_fooling_set(n);
        if (set.size() < fooling_size_floor(n)) note_failure(r, "greedy set below analytic floor");
        for (auto& sigma : set) {
            ++r.checked;
            FoolingInput f = fooling_input(n, sigma);
            VertexSet mod = max_out_degree_set(f.t);
            if (mod.size() != 1 || mod.front() != 1)
                note_failure(r, "vertex 1 not the unique max-out-degree vertex at n=" + std::to_string(n));
        }
        for (size_t a = 0; a < set.size(); ++a)
            for (size_t b = a + 1; b < set.size(); ++b) {
                ++r.checked;
                bool far = false;
                for (size_t k = 0; k < set[a].size(); ++k)
                    if (std::abs(set[a][k] - set[b][k]) >= 2) far = true;
                if (!far) note_failure(r, "pair within l-infinity distance 1");
                // no single vertex answers all four input combinations
                VertexSet m_ab = max_out_degree_set(fooling_cross(n, set[a], set[b]));
                VertexSet m_ba = max_out_degree_set(fooling_cross(n, set[b], set[a]));
                VertexSet m_aa = max_out_degree_set(fooling_cross(n, set[a], set[a]));
                VertexSet m_bb = max_out_degree_set(fooling_cross(n, set[b], set[b]));
                VertexSet inter, tmp;
                std::set_intersection(m_aa.begin(), m_aa.end(), m_bb.begin(), m_bb.end(), std::back_inserter(tmp));
                std::set_intersection(tmp.begin(), tmp.end(), m_ab.begin(), m_ab.end(), std::back_inserter(inter));
                tmp = std::move(inter);
                inter.clear();
                std::set_intersection(tmp.begin(), tmp.end(), m_ba.begin(), m_ba.end(), std::back_inserter(inter));
                if (!inter.empty()) note_failure(r, "some vertex answers all four combinations");
            }
        r.notes.push_back("n=" + std::to_string(n) + ": set size " + std::to_string(set.size()));
    }
    return r;
}

SuiteResult verify_pmf(int max_n) {
    SuiteResult r;
    r.name = "pmf";
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        std::vector<int> perm(size_t(n), 0);
        for (int k = 0; k < n; ++k) perm[size_t(k)] = k + 1;
        do {
            Permutation sigma{perm};
            for (uint64_t sm = 0; sm < (uint64_t(1) << n); ++sm) {
                VertexSet s;
                for (int v = 1; v <= n; ++v)
                    if ((sm >> (v - 1)) & 1) s.push_back(v);
                ++r.checked;
                PMFInstance inst{s, sigma};
                auto [s2, t] = pmf_to_tindexking(inst);
                PMFInstance back = tindexking_to_pmf(s2, t);
                if (back.s != inst.s || back.sigma.ranks() != inst.sigma.ranks())
                    note_failure(r, "round-trip not the identity at n=" + std::to_string(n));
                if (!s.empty()) {
                    Induced sub = induced(t, s);
                    VertexSet kings = all_kings(sub.sub);
                    if (kings.size() != 1 || sub.labels[size_t(kings.front() - 1)] != pmf_eval(inst))
                        note_failure(r, "king of G|S is not the PMF answer at n=" + std::to_string(n));
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // DISJ truth table
    int dn = std::min(max_n, 6);
    for (uint64_t am = 0; am < (uint64_t(1) << dn); ++am)
        for (uint64_t bm = 0; bm < (uint64_t(1) << dn); ++bm) {
            VertexSet sa, tb;
            for (int v = 1; v <= dn; ++v) {
                if ((am >> (v - 1)) & 1) sa.push_back(v);
                if ((bm >> (v - 1)) & 1) tb.push_back(v);
            }
            ++r.checked;
            DisjReduction red = disj_to_pmf(sa, tb, dn);
            int got = red.decode(pmf_eval(red.inst));
            int expected = (am & bm) == 0 ? 1 : 0;
            if (got != expected) note_failure(r, "DISJ truth-table mismatch at n=" + std::to_string(dn));
        }
    return r;
}

SuiteResult verify_rank() {
    SuiteResult r;
    r.name = "rank";
    for (int n = 2; n <= 4; ++n) {
        ++r.checked;
        int value = exact_game_value(n);
        r.notes.push_back("n=" + std::to_string(n) + ": value " + std::to_string(value));
        if (value != n - 1) note_failure(r, "game value is not n-1 at n=" + std::to_string(n));
    }
    for (int n : {6, 10, 16}) {
        for (uint64_t seed = 0; seed < 200; ++seed) {
            ++r.checked;
            GameResult g = play_rank_game_alg3(n, delayer_random(seed));
            if (!g.valid || g.delayer_score > n - 1)
                note_failure(r, "alg3 run invalid or over the cap at n=" + std::to_string(n));
        }
        ++r.checked;
        GameResult g = play_rank_game_alg3(n, delayer_defer_first(n - 1));
        if (g.delayer_score != n - 1 || !g.valid)
            note_failure(r, "defer-first(n-1) did not score n-1 at n=" + std::to_string(n));
    }
    return r;
}

SuiteResult verify_query(int max_n) {
    SuiteResult r;
    r.name = "query";
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        for_each_tournament(n, [&](const Tournament& t) {
            for (uint64_t seed = 0; seed < 20; ++seed) {
                ++r.checked;
                CountingOracle oracle(t);
                Rng rng(derive_seed(seed, uint64_t(n)));
                QueryKingResult q = randomized_king_query(oracle, rng);
                if (!is_king(t, q.king)) note_failure(r, "non-king output at n=" + std::to_string(n));
            }
        });
    }
    {
        int n = 128;
        uint64_t total = 0, runs = 200;
        for (uint64_t seed = 0; seed < runs; ++seed) {
            ++r.checked;
            Tournament t = random_tournament(n, seed);
            CountingOracle oracle(t);
            Rng rng(derive_seed(seed, 0x71ULL));
            QueryKingResult q = randomized_king_query(oracle, rng);
            if (!is_king(t, q.king)) note_failure(r, "non-king output at n=128");
            total += q.queries;
        }
        double mean = double(total) / double(runs);
        r.notes.push_back("n=128 mean queries " + std::to_string(mean));
        if (mean > 10.0 * n) note_failure(r, "mean queries above 10n at n=128");
    }
    return r;
}

}  // namespace tcc
