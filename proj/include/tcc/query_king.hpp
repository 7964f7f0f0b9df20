#pragma once

#include <cstdint>
#include <vector>

#include "tcc/rng.hpp"
#include "tcc/tournament.hpp"

namespace tcc {

/// Edge-query access to a tournament with a distinct-pair counter. Repeat
/// queries are free when caching is on (the default); the counter then equals
/// the number of distinct pairs in the log.
class CountingOracle {
public:
    explicit CountingOracle(const Tournament& t, bool cache = true);

    int n() const { return t_->n(); }
    /// true iff the edge between i and j is directed i -> j.
    bool query(int i, int j);
    uint64_t queries() const { return count_; }
    const std::vector<std::pair<int, int>>& log() const { return log_; }

private:
    const Tournament* t_;
    bool cache_;
    uint64_t count_ = 0;
    std::vector<char> seen_;
    std::vector<std::pair<int, int>> log_;
};

struct QueryKingResult {
    int king = 0;
    uint64_t queries = 0;
};

/// Zero-error randomized king search: repeatedly sample v from the candidate
/// set and restrict to v's in-neighbourhood (if empty, v itself is the king)
/// until at most sqrt(n) candidates remain, then resolve those by querying
/// all their pairs. Randomness affects only the query count; the output is
/// always a king, with O(n) expected queries.
QueryKingResult randomized_king_query(CountingOracle& oracle, Rng& rng);

}  // namespace tcc
