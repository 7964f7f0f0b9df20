#include "tcc/fooling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tcc {

namespace {

void validate_fooling_args(int n, const std::vector<int>& sigma) {
    if (n < 8 || n % 2) throw std::invalid_argument("fooling: n must be even and at least 8");
    size_t m = size_t(n / 2 - 1);
    if (sigma.size() != m) throw std::invalid_argument("fooling: sigma must rank {2..n/2}");
    std::vector<char> seen(m + 2, 0);
    for (int r : sigma) {
        if (r < 2 || r > n / 2 || seen[size_t(r - 1)]) throw std::invalid_argument("fooling: sigma is not a bijection on {2..n/2}");
        seen[size_t(r - 1)] = 1;
    }
}

int rank_of(const std::vector<int>& sigma, int i) { return sigma[size_t(i - 2)]; }

int element_with_rank(const std::vector<int>& sigma, int r) {
    for (size_t k = 0; k < sigma.size(); ++k)
        if (sigma[k] == r) return int(k) + 2;
    throw std::logic_error("fooling: rank not present");
}

// Alice's side: within-L and within-R edges from sigma_a.
void fill_alice(Tournament& t, int n, const std::vector<int>& sa) {
    int half = n / 2;
    for (int i = 2; i <= half; ++i) {
        t.set_direction(1, i);                // 1 is the source of L
        t.set_direction(half + 1, half + i);  // 1' is the source of R
    }
    for (int i = 2; i <= half; ++i)
        for (int j = i + 1; j <= half; ++j) {
            bool fwd = rank_of(sa, i) < rank_of(sa, j);
            if (fwd) {
                t.set_direction(i, j);
                t.set_direction(half + i, half + j);
            } else {
                t.set_direction(j, i);
                t.set_direction(half + j, half + i);
            }
        }
}

// Bob's side: crossing edges from sigma_b.
void fill_bob(Tournament& t, int n, const std::vector<int>& sb) {
    int half = n / 2;
    t.set_direction(1, half + 1);  // 1 -> 1', fixed for every input
    int second = element_with_rank(sb, 2);
    for (int j = 2; j <= half; ++j) {
        if (j == second)
            t.set_direction(1, half + j);
        else
            t.set_direction(half + j, 1);
    }
    for (int i = 2; i <= half; ++i) t.set_direction(i, half + 1);
    for (int i = 2; i <= half; ++i)
        for (int j = 2; j <= half; ++j) {
            if (rank_of(sb, i) >= rank_of(sb, j))
                t.set_direction(i, half + j);
            else
                t.set_direction(half + j, i);
        }
}

}  // namespace

FoolingInput fooling_input(int n, const std::vector<int>& sigma) {
    validate_fooling_args(n, sigma);
    FoolingInput f;
    f.n = n;
    f.sigma = sigma;
    f.t = fooling_cross(n, sigma, sigma);
    f.p = EdgePartition(n);
    int half = n / 2;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((i <= half) != (j <= half)) f.p.set_owner(i, j, Party::bob);
    return f;
}

Tournament fooling_cross(int n, const std::vector<int>& sigma_a, const std::vector<int>& sigma_b) {
    validate_fooling_args(n, sigma_a);
    validate_fooling_args(n, sigma_b);
    Tournament t(n);
    fill_alice(t, n, sigma_a);
    fill_bob(t, n, sigma_b);
    return t;
}

std::vector<std::vector<int>> greedy_fooling_set(int n) {
    if (n < 8 || n % 2) throw std::invalid_argument("fooling: n must be even and at least 8");
    int m = n / 2 - 1;
    std::vector<int> perm(size_t(m), 0);
    for (int k = 0; k < m; ++k) perm[size_t(k)] = k + 2;
    std::vector<std::vector<int>> candidates;
    do {
        candidates.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::vector<int>> kept;
    while (!candidates.empty()) {
        std::vector<int> sigma = candidates.front();
        kept.push_back(sigma);
        std::vector<std::vector<int>> rest;
        for (auto& tau : candidates) {
            bool near = true;
            for (size_t k = 0; k < tau.size() && near; ++k)
                if (std::abs(tau[k] - sigma[k]) >= 2) near = false;
            if (!near) rest.push_back(tau);
        }
        candidates = std::move(rest);
    }
    return kept;
}

uint64_t fooling_size_floor(int n) {
    if (n < 8 || n % 2) throw std::invalid_argument("fooling: n must be even and at least 8");
    long double fact = 1;
    for (int k = 2; k <= n / 2 - 1; ++k) fact *= k;
    long double pow3 = std::pow(3.0L, n);
    uint64_t floor_val = uint64_t(fact / pow3);
    return floor_val < 1 ? 1 : floor_val;
}

}  // namespace tcc
