#pragma once

#include <cstdint>
#include <vector>

#include "tcc/partition.hpp"
#include "tcc/tournament.hpp"

namespace tcc {

/// Fooling-set inputs for maximum-out-degree finding, built from a
/// permutation sigma of {2..n/2} (n even, n >= 8). Vertices 1..n/2 form L,
/// and j' = n/2 + j forms R. Alice holds the within-L and within-R pairs,
/// Bob the crossing pairs:
///  - 1 beats all of L\{1}; 1' beats all of R\{1'}                  [Alice]
///  - i -> j inside L\{1} iff sigma(i) < sigma(j); same inside R    [Alice]
///  - 1 -> 1', 1 -> sigma^{-1}(2)'; every other j' -> 1             [Bob]
///  - i -> 1' for all i in {2..n/2}                                 [Bob]
///  - i -> j' iff sigma(i) >= sigma(j) for i, j in {2..n/2}         [Bob]
/// On the matched input (A_sigma, B_sigma) vertex 1 is the unique maximum
/// out-degree vertex, with d+ = n/2 + 1.
struct FoolingInput {
    int n = 0;
    std::vector<int> sigma;  ///< sigma[k] = rank of element k+2, a bijection on {2..n/2}
    Tournament t{1};
    EdgePartition p{1};
};

FoolingInput fooling_input(int n, const std::vector<int>& sigma);

/// Cross input: Alice's edges from sigma_a, Bob's from sigma_b.
Tournament fooling_cross(int n, const std::vector<int>& sigma_a, const std::vector<int>& sigma_b);

/// Greedy fooling set: scan permutations of {2..n/2} in lexicographic order,
/// keeping sigma and discarding everything within l-infinity distance < 2.
/// Every kept pair differs by >= 2 somewhere, which makes one of the two
/// cross inputs demote vertex 1.
std::vector<std::vector<int>> greedy_fooling_set(int n);

/// Analytic floor max(1, floor((n/2-1)!/3^n)) reported alongside the greedy set.
uint64_t fooling_size_floor(int n);

}  // namespace tcc
