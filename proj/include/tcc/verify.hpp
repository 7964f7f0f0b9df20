#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tcc/tournament.hpp"

namespace tcc {

struct SuiteResult {
    std::string name;
    uint64_t checked = 0;
    uint64_t failed = 0;
    std::vector<std::string> notes;

    bool ok() const { return failed == 0; }
};

/// Enumerate every tournament on n vertices and call fn on each.
void for_each_tournament(int n, const std::function<void(const Tournament&)>& fn);

// Invariant suites behind the CLI `verify` subcommand. Each returns counts
// of instances checked and failures, with notes describing any failure.
SuiteResult verify_kings(int max_n);
SuiteResult verify_source_cis(int max_n);
SuiteResult verify_gssigma(int max_n);
SuiteResult verify_fooling();
SuiteResult verify_pmf(int max_n);
SuiteResult verify_rank();
SuiteResult verify_query(int max_n);

}  // namespace tcc
