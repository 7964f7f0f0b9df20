#include "tcc/tournament.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "tcc/rng.hpp"

namespace tcc {

int64_t pair_index(int n, int i, int j) {
    if (i == j) throw std::out_of_range("pair_index: i == j");
    check_vertex(n, i);
    check_vertex(n, j);
    if (i > j) std::swap(i, j);
    // pairs (i,*) start after the (i-1) full rows above
    return int64_t(i - 1) * n - int64_t(i) * (i - 1) / 2 + (j - i) - 1;
}

std::pair<int, int> pair_at(int n, int64_t k) {
    int i = 1;
    int64_t base = 0;
    while (base + (n - i) <= k) {
        base += n - i;
        ++i;
    }
    return {i, i + int(k - base) + 1};
}

void check_vertex(int n, int v) {
    if (v < 1 || v > n) throw std::out_of_range("vertex " + std::to_string(v) + " not in [1," + std::to_string(n) + "]");
}

Permutation::Permutation(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    int n = int(ranks_.size());
    std::vector<char> seen(size_t(n) + 1, 0);
    for (int r : ranks_) {
        if (r < 1 || r > n || seen[size_t(r)]) throw std::invalid_argument("Permutation: ranks must be a bijection on [n]");
        seen[size_t(r)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> r(size_t(n), 0);
    for (int i = 0; i < n; ++i) r[size_t(i)] = i + 1;
    return Permutation(std::move(r));
}

int Permutation::element_with_rank(int r) const {
    for (int i = 1; i <= n(); ++i)
        if (rank_of(i) == r) return i;
    throw std::out_of_range("Permutation: no element with rank " + std::to_string(r));
}

Tournament::Tournament(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Tournament: n must be positive");
    w_.assign(size_t((pair_count(n) + 63) / 64), 0);
}

bool Tournament::pair_bit(int i, int j) const {
    int64_t idx = pair_index(n_, i, j);
    return (w_[size_t(idx >> 6)] >> (idx & 63)) & 1;
}

void Tournament::set_pair_bit(int i, int j, bool min_to_max) {
    set_pair_bit_by_index(pair_index(n_, i, j), min_to_max);
}

void Tournament::set_pair_bit_by_index(int64_t idx, bool b) {
    uint64_t mask = uint64_t(1) << (idx & 63);
    if (b)
        w_[size_t(idx >> 6)] |= mask;
    else
        w_[size_t(idx >> 6)] &= ~mask;
}

bool Tournament::pair_bit_by_index(int64_t idx) const {
    return (w_[size_t(idx >> 6)] >> (idx & 63)) & 1;
}

bool Tournament::points(int from, int to) const {
    bool bit = pair_bit(from, to);
    return from < to ? bit : !bit;
}

void Tournament::set_direction(int from, int to) {
    set_pair_bit(std::min(from, to), std::max(from, to), from < to);
}

AdjacencyView::AdjacencyView(const Tournament& t) : n_(t.n()), wpr_((t.n() + 63) / 64) {
    rows_.assign(size_t(n_) * wpr_, 0);
    int64_t idx = 0;
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j, ++idx) {
            if (t.pair_bit_by_index(idx))
                rows_[size_t(i - 1) * wpr_ + ((j - 1) >> 6)] |= uint64_t(1) << ((j - 1) & 63);
            else
                rows_[size_t(j - 1) * wpr_ + ((i - 1) >> 6)] |= uint64_t(1) << ((i - 1) & 63);
        }
    }
}

std::pair<int, int> direction(const Tournament& t, int i, int j) {
    if (i == j) throw std::out_of_range("direction: i == j");
    return t.points(i, j) ? std::make_pair(i, j) : std::make_pair(j, i);
}

Neighborhoods neighborhoods(const Tournament& t, int v) {
    check_vertex(t.n(), v);
    Neighborhoods nb;
    for (int u = 1; u <= t.n(); ++u) {
        if (u == v) continue;
        if (t.points(v, u))
            nb.out.push_back(u);
        else
            nb.in.push_back(u);
    }
    nb.in_degree = int(nb.in.size());
    nb.out_degree = int(nb.out.size());
    return nb;
}

std::vector<int> out_degrees(const Tournament& t) {
    std::vector<int> d(size_t(t.n()), 0);
    int64_t idx = 0;
    for (int i = 1; i <= t.n(); ++i)
        for (int j = i + 1; j <= t.n(); ++j, ++idx) {
            if (t.pair_bit_by_index(idx))
                ++d[size_t(i - 1)];
            else
                ++d[size_t(j - 1)];
        }
    return d;
}

bool is_king(const AdjacencyView& adj, int v) {
    int wpr = adj.words_per_row();
    int n = adj.n();
    // reach = {v} + out(v) + out(out(v))
    std::vector<uint64_t> reach(adj.row(v), adj.row(v) + wpr);
    reach[size_t((v - 1) >> 6)] |= uint64_t(1) << ((v - 1) & 63);
    const uint64_t* vrow = adj.row(v);
    for (int w = 0; w < wpr; ++w) {
        uint64_t bits = vrow[w];
        while (bits) {
            int u = (w << 6) + std::countr_zero(bits) + 1;
            bits &= bits - 1;
            const uint64_t* urow = adj.row(u);
            for (int k = 0; k < wpr; ++k) reach[size_t(k)] |= urow[k];
        }
    }
    int full = n >> 6, tail = n & 63;
    for (int k = 0; k < full; ++k)
        if (reach[size_t(k)] != ~uint64_t(0)) return false;
    if (tail && (reach[size_t(full)] & ((uint64_t(1) << tail) - 1)) != (uint64_t(1) << tail) - 1) return false;
    return true;
}

bool is_king(const Tournament& t, int v) {
    check_vertex(t.n(), v);
    return is_king(AdjacencyView(t), v);
}

VertexSet all_kings(const Tournament& t) {
    AdjacencyView adj(t);
    VertexSet kings;
    for (int v = 1; v <= t.n(); ++v)
        if (is_king(adj, v)) kings.push_back(v);
    return kings;
}

int source_of(const Tournament& t) {
    std::vector<int> d = out_degrees(t);
    for (int v = 1; v <= t.n(); ++v)
        if (d[size_t(v - 1)] == t.n() - 1) return v;
    return 0;
}

VertexSet max_out_degree_set(const Tournament& t) {
    std::vector<int> d = out_degrees(t);
    int mx = *std::max_element(d.begin(), d.end());
    VertexSet s;
    for (int v = 1; v <= t.n(); ++v)
        if (d[size_t(v - 1)] == mx) s.push_back(v);
    return s;
}

Induced induced(const Tournament& t, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced: empty vertex set");
    for (int v : s) check_vertex(t.n(), v);
    Induced r{Tournament(int(s.size())), s};
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            r.sub.set_pair_bit(int(a) + 1, int(b) + 1, t.points(s[a], s[b]));
    return r;
}

std::optional<std::vector<int>> transitive_order(const Tournament& t) {
    // acyclic tournament <=> out-degrees are a permutation of {0..n-1}
    std::vector<int> d = out_degrees(t);
    int n = t.n();
    std::vector<int> order(size_t(n), 0);
    std::vector<char> seen(size_t(n), 0);
    for (int v = 1; v <= n; ++v) {
        int deg = d[size_t(v - 1)];
        if (seen[size_t(deg)]) return std::nullopt;
        seen[size_t(deg)] = 1;
        order[size_t(n - 1 - deg)] = v;  // source (deg n-1) first
    }
    return order;
}

Tournament transitive_from_permutation(const Permutation& sigma) {
    Tournament t(sigma.n());
    for (int i = 1; i <= sigma.n(); ++i)
        for (int j = i + 1; j <= sigma.n(); ++j)
            t.set_pair_bit(i, j, sigma.rank_of(i) > sigma.rank_of(j));
    return t;
}

Tournament random_tournament(int n, uint64_t seed) {
    Tournament t(n);
    Rng rng(derive_seed(seed, 0x746f7572ULL));
    int64_t pairs = pair_count(n);
    for (int64_t base = 0; base < pairs; base += 64) {
        uint64_t word = rng.next();
        int take = int(std::min<int64_t>(64, pairs - base));
        for (int k = 0; k < take; ++k) t.set_pair_bit_by_index(base + k, (word >> k) & 1);
    }
    return t;
}

std::string serialize(const Tournament& t) {
    std::string out = std::to_string(t.n());
    out.push_back('\n');
    int64_t pairs = pair_count(t.n());
    for (int64_t k = 0; k < pairs; ++k) out.push_back(t.pair_bit_by_index(k) ? '1' : '0');
    out.push_back('\n');
    return out;
}

namespace {

// Shared by tournament / partition / graph parsers: header line with n,
// then one line of `pairs` symbols from a two-letter alphabet.
struct TwoLineFile {
    int n;
    std::string symbols;
};

TwoLineFile parse_two_line(const std::string& text, char zero, char one) {
    std::istringstream in(text);
    std::string line1;
    if (!std::getline(in, line1)) throw ParseError("missing header line", 1, 1);
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(line1, &pos);
        while (pos < line1.size() && (line1[pos] == ' ' || line1[pos] == '\r')) ++pos;
        if (pos != line1.size()) throw std::invalid_argument("");
    } catch (...) {
        throw ParseError("header must be a vertex count", 1, 1);
    }
    if (n < 1) throw ParseError("vertex count must be positive", 1, 1);
    std::string line2;
    std::getline(in, line2);
    if (!line2.empty() && line2.back() == '\r') line2.pop_back();
    int64_t pairs = pair_count(n);
    if (int64_t(line2.size()) != pairs)
        throw ParseError("expected " + std::to_string(pairs) + " symbols, got " + std::to_string(line2.size()), 2,
                         line2.size() + 1);
    for (size_t k = 0; k < line2.size(); ++k)
        if (line2[k] != zero && line2[k] != one)
            throw ParseError(std::string("invalid symbol '") + line2[k] + "'", 2, k + 1);
    return {n, line2};
}

}  // namespace

Tournament parse_tournament(const std::string& text) {
    TwoLineFile f = parse_two_line(text, '0', '1');
    Tournament t(f.n);
    for (size_t k = 0; k < f.symbols.size(); ++k) t.set_pair_bit_by_index(int64_t(k), f.symbols[k] == '1');
    return t;
}

std::string vertex_set_to_string(const VertexSet& s) {
    std::string out;
    for (size_t k = 0; k < s.size(); ++k) {
        if (k) out.push_back(',');
        out += std::to_string(s[k]);
    }
    return out;
}

VertexSet parse_vertex_set(const std::string& text) {
    VertexSet s;
    if (text.empty()) return s;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            s.push_back(std::stoi(tok));
        } catch (...) {
            throw std::invalid_argument("vertex set: bad label '" + tok + "'");
        }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

PartialOrientation::PartialOrientation(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("PartialOrientation: n must be positive");
    d_.assign(size_t(pair_count(n)), 0);
}

bool PartialOrientation::is_set(int i, int j) const { return d_[size_t(pair_index(n_, i, j))] != 0; }

bool PartialOrientation::points(int from, int to) const {
    int8_t s = d_[size_t(pair_index(n_, from, to))];
    if (s == 0) return false;
    return (s == 1) == (from < to);
}

void PartialOrientation::set_direction(int from, int to) {
    int8_t& s = d_[size_t(pair_index(n_, from, to))];
    if (s == 0) ++set_count_;
    s = (from < to) ? 1 : 2;
}

int PartialOrientation::in_degree(int v) const {
    int d = 0;
    for (int u = 1; u <= n_; ++u)
        if (u != v && points(u, v)) ++d;
    return d;
}

int PartialOrientation::out_degree(int v) const {
    int d = 0;
    for (int u = 1; u <= n_; ++u)
        if (u != v && points(v, u)) ++d;
    return d;
}

Tournament PartialOrientation::complete_arbitrary() const {
    Tournament t(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) t.set_pair_bit(i, j, d_[size_t(pair_index(n_, i, j))] != 2);
    return t;
}

bool king_in_all_completions(const PartialOrientation& rho, int v) {
    int n = rho.n();
    std::vector<char> out(size_t(n) + 1, 0);
    for (int u = 1; u <= n; ++u)
        if (u != v && rho.points(v, u)) out[size_t(u)] = 1;
    for (int w = 1; w <= n; ++w) {
        if (w == v || out[size_t(w)]) continue;
        bool witnessed = false;
        for (int u = 1; u <= n && !witnessed; ++u)
            if (out[size_t(u)] && u != w && rho.points(u, w)) witnessed = true;
        if (!witnessed) return false;
    }
    return true;
}

}  // namespace tcc
