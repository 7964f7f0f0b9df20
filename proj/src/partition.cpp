#include "tcc/partition.hpp"

#include <sstream>

#include "tcc/rng.hpp"

namespace tcc {

EdgePartition::EdgePartition(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("EdgePartition: n must be positive");
    bob_.assign(size_t((pair_count(n) + 63) / 64), 0);
}

Party EdgePartition::owner(int i, int j) const { return owner_by_index(pair_index(n_, i, j)); }

Party EdgePartition::owner_by_index(int64_t idx) const {
    return ((bob_[size_t(idx >> 6)] >> (idx & 63)) & 1) ? Party::bob : Party::alice;
}

void EdgePartition::set_owner(int i, int j, Party p) { set_owner_by_index(pair_index(n_, i, j), p); }

void EdgePartition::set_owner_by_index(int64_t idx, Party p) {
    uint64_t mask = uint64_t(1) << (idx & 63);
    if (p == Party::bob)
        bob_[size_t(idx >> 6)] |= mask;
    else
        bob_[size_t(idx >> 6)] &= ~mask;
}

int64_t EdgePartition::owned_within(Party p, const VertexSet& s) const {
    int64_t c = 0;
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            if (owner(s[a], s[b]) == p) ++c;
    return c;
}

EdgePartition all_alice_partition(int n) { return EdgePartition(n); }

EdgePartition split_halves_partition(int n) {
    EdgePartition p(n);
    int half = (n + 1) / 2;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((i <= half) != (j <= half)) p.set_owner(i, j, Party::bob);
    return p;
}

EdgePartition random_partition(int n, uint64_t seed) {
    EdgePartition p(n);
    Rng rng(derive_seed(seed, 0x70617274ULL));
    int64_t pairs = pair_count(n);
    for (int64_t base = 0; base < pairs; base += 64) {
        uint64_t word = rng.next();
        int take = int(std::min<int64_t>(64, pairs - base));
        for (int k = 0; k < take; ++k)
            if ((word >> k) & 1) p.set_owner_by_index(base + k, Party::bob);
    }
    return p;
}

std::string serialize(const EdgePartition& p) {
    std::string out = std::to_string(p.n());
    out.push_back('\n');
    int64_t pairs = pair_count(p.n());
    for (int64_t k = 0; k < pairs; ++k) out.push_back(party_char(p.owner_by_index(k)));
    out.push_back('\n');
    return out;
}

EdgePartition parse_partition(const std::string& text) {
    std::istringstream in(text);
    std::string line1;
    if (!std::getline(in, line1)) throw ParseError("missing header line", 1, 1);
    int n = 0;
    try {
        n = std::stoi(line1);
    } catch (...) {
        throw ParseError("header must be a vertex count", 1, 1);
    }
    if (n < 1) throw ParseError("vertex count must be positive", 1, 1);
    std::string line2;
    std::getline(in, line2);
    if (!line2.empty() && line2.back() == '\r') line2.pop_back();
    if (int64_t(line2.size()) != pair_count(n))
        throw ParseError("expected " + std::to_string(pair_count(n)) + " symbols, got " +
                             std::to_string(line2.size()),
                         2, line2.size() + 1);
    EdgePartition p(n);
    for (size_t k = 0; k < line2.size(); ++k) {
        if (line2[k] == 'B')
            p.set_owner_by_index(int64_t(k), Party::bob);
        else if (line2[k] != 'A')
            throw ParseError(std::string("invalid symbol '") + line2[k] + "'", 2, k + 1);
    }
    return p;
}

}  // namespace tcc
