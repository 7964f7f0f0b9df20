#include "tcc/gssigma.hpp"

#include <algorithm>

#include "tcc/pmf.hpp"

namespace tcc {

VertexSet GSSigma::predicted_kings() const {
    int k = pmf_eval({s, sigma});
    return {label(k, 0), label(k, 1), label(k, 2)};
}

GSSigma build_gssigma(int n, const VertexSet& s, const Permutation& sigma) {
    if (s.empty()) throw std::invalid_argument("build_gssigma: S must be nonempty");
    if (sigma.n() != n) throw std::invalid_argument("build_gssigma: sigma size mismatch");
    for (int v : s) check_vertex(n, v);

    GSSigma g;
    g.base_n = n;
    g.s = s;
    g.sigma = sigma;
    g.t = Tournament(3 * n);
    g.p = EdgePartition(3 * n);

    std::vector<char> in_s(size_t(n) + 1, 0);
    for (int v : s) in_s[size_t(v)] = 1;

    for (int u = 1; u <= 3 * n; ++u) {
        int i = g.element_of(u), b = g.copy_of(u);
        for (int w = u + 1; w <= 3 * n; ++w) {
            int j = g.element_of(w), c = g.copy_of(w);
            if (b == c) {
                g.t.set_pair_bit(u, w, sigma.rank_of(i) > sigma.rank_of(j));
                g.p.set_owner(u, w, Party::bob);
                continue;
            }
            g.p.set_owner(u, w, Party::alice);
            bool si = in_s[size_t(i)], sj = in_s[size_t(j)];
            if (si != sj) {
                g.t.set_pair_bit(u, w, si);  // the S-side copy dominates
            } else {
                g.t.set_pair_bit(u, w, c == (b + 1) % 3);
            }
        }
    }
    return g;
}

}  // namespace tcc
