#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "fibcalc/exactring.hpp"

namespace fibcalc {

// Finite prefix {1..N} of the cobweb poset. Vertex x lies on level k >= 1
// when F_{k+1} <= x <= F_{k+2}-1, so level k holds F_k vertices and the
// prefix is a disjoint union of complete levels exactly when N = F_{m+2}-1.
// The order relation is by level: x < y iff level(x) < level(y).
struct CobwebPrefix {
    explicit CobwebPrefix(std::size_t N);

    std::size_t n_elements = 0;
    std::size_t max_level = 0;  // largest k with F_{k+1} <= N

    std::size_t level_first(std::size_t k) const;  // F_{k+1}
    std::size_t level_last(std::size_t k) const;   // min(N, F_{k+2}-1)
    std::size_t level_size(std::size_t k) const;
    bool complete() const;  // every level present in full
};

// Element of the incidence algebra restricted to {1..N}: a square matrix
// with f(x,y) = 0 whenever x <= y fails in the poset order. 1-based access.
struct IncidenceFn {
    IncidenceFn() = default;
    explicit IncidenceFn(std::size_t size) : n(size), e(size * size) {}

    std::size_t n = 0;
    std::vector<Rational> e;

    Rational& at(std::size_t x, std::size_t y) { return e[(x - 1) * n + (y - 1)]; }
    const Rational& at(std::size_t x, std::size_t y) const { return e[(x - 1) * n + (y - 1)]; }

    friend bool operator==(const IncidenceFn& l, const IncidenceFn& r) {
        return l.n == r.n && l.e == r.e;
    }
    friend bool operator!=(const IncidenceFn& l, const IncidenceFn& r) { return !(l == r); }
};

// The unique k with F_{k+1} <= x <= F_{k+2}-1. Rejects x = 0.
std::size_t level_of(std::size_t x);

// zeta(x,y): 1 when x = y or level(x) < level(y) and x < y; 0 otherwise.
int zeta(std::size_t x, std::size_t y);

// The two-part form of zeta: zeta1 counts y >= x outright, zeta0 knocks out
// the same-level pairs via the offset representation x = F_{s+1} + k,
// y = x + r with 1 <= r <= F_s - k - 1. Always zeta1 - zeta0 = zeta.
std::pair<int, int> zeta_split(std::size_t x, std::size_t y);

IncidenceFn zeta_matrix(std::size_t N);
IncidenceFn delta_matrix(std::size_t N);

// (f * g)(x,y) = sum over x <= z <= y of f(x,z) g(z,y); the triangular
// supports make this the restriction of the plain matrix product.
IncidenceFn incidence_convolve(const IncidenceFn& f, const IncidenceFn& g);

// Mobius function three ways: the defining recurrence
// mu(x,y) = -sum_{x <= z < y} mu(x,z), the level-product closed form
// -prod_{l=k+1}^{n-1} (1 - F_l), and forward substitution on
// zeta * mu = delta. All three agree entrywise; tests pin that down.
IncidenceFn mobius_recurrence(std::size_t N);
mpz_class mobius_closed(std::size_t x, std::size_t y);
IncidenceFn mobius_closed_matrix(std::size_t N);
IncidenceFn mobius_invert(std::size_t N);

// Ceiling on brute-force chain enumeration; level 8 means 65520 maximal
// chains from the root, still instant. Raise per call if needed.
inline constexpr std::size_t kDefaultChainCap = 8;

// DFS count of maximal chains from vertex 1 through levels 1..n_level,
// cross-checked against n_level's F-factorial before returning.
mpz_class count_max_chains_root(std::size_t n_level, std::size_t cap = kDefaultChainCap);

// DFS count of maximal chains climbing from a level-k vertex up to level n.
// Verifies the count is the same for every level-k base vertex and equals
// the falling product F_n ... F_{k+1} before returning.
mpz_class count_chains_between(std::size_t k, std::size_t n, std::size_t cap = kDefaultChainCap);

// Number of copies of the m-level prefix climbing from level k, realized as
// the chain-count quotient count_chains_between(k, k+m) / m-th F-factorial.
// Verifies divisibility is exact and the quotient is fibonomial(k+m, m).
mpz_class count_subposets(std::size_t k, std::size_t m, std::size_t cap = kDefaultChainCap);

}  // namespace fibcalc
