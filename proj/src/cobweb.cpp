#include "fibcalc/cobweb.hpp"

#include <stdexcept>
#include <string>

#include "fibcalc/fibnum.hpp"

namespace fibcalc {

namespace {

std::size_t fib_sz(std::size_t n) {
    const mpz_class f = fib(n);
    if (!f.fits_ulong_p()) throw std::overflow_error("cobweb: prefix too large");
    return static_cast<std::size_t>(f.get_ui());
}

}  // namespace

CobwebPrefix::CobwebPrefix(std::size_t N) : n_elements(N) {
    if (N == 0) throw std::invalid_argument("CobwebPrefix: empty prefix");
    max_level = level_of(N);
}

std::size_t CobwebPrefix::level_first(std::size_t k) const { return fib_sz(k + 1); }

std::size_t CobwebPrefix::level_last(std::size_t k) const {
    const std::size_t full = fib_sz(k + 2) - 1;
    return full < n_elements ? full : n_elements;
}

std::size_t CobwebPrefix::level_size(std::size_t k) const {
    return level_last(k) - level_first(k) + 1;
}

bool CobwebPrefix::complete() const { return n_elements == fib_sz(max_level + 2) - 1; }

std::size_t level_of(std::size_t x) {
    if (x == 0) throw std::invalid_argument("level_of: vertices start at 1");
    // Grow-once table of word-sized Fibonacci numbers: level_of sits in the
    // inner loop of chain DFS, so no bignum traffic here. F_93 overflows 64
    // bits, which is already beyond any addressable prefix.
    static thread_local std::vector<std::size_t> f = {0, 1, 1};
    std::size_t k = 1;
    while (true) {
        if (k + 2 >= f.size()) {
            const std::size_t next = f[f.size() - 1] + f[f.size() - 2];
            if (next < f.back()) throw std::overflow_error("level_of: out of 64-bit range");
            f.push_back(next);
        }
        if (f[k + 2] > x) return k;
        ++k;
    }
}

int zeta(std::size_t x, std::size_t y) {
    if (x == y) return 1;
    if (x > y) return 0;
    return level_of(x) < level_of(y) ? 1 : 0;
}

std::pair<int, int> zeta_split(std::size_t x, std::size_t y) {
    const int zeta1 = y >= x ? 1 : 0;
    int zeta0 = 0;
    if (x < y) {
        const std::size_t s = level_of(x);
        const mpz_class k = mpz_class(x) - fib(s + 1);
        const mpz_class r = y - x;
        if (r >= 1 && r <= fib(s) - k - 1) zeta0 = 1;
    }
    return {zeta1, zeta0};
}

IncidenceFn zeta_matrix(std::size_t N) {
    if (N == 0) throw std::invalid_argument("zeta_matrix: size must be positive");
    IncidenceFn m(N);
    std::vector<std::size_t> lv(N + 1);
    for (std::size_t x = 1; x <= N; ++x) lv[x] = level_of(x);
    for (std::size_t x = 1; x <= N; ++x) {
        m.at(x, x) = 1;
        for (std::size_t y = x + 1; y <= N; ++y)
            if (lv[x] < lv[y]) m.at(x, y) = 1;
    }
    return m;
}

IncidenceFn delta_matrix(std::size_t N) {
    if (N == 0) throw std::invalid_argument("delta_matrix: size must be positive");
    IncidenceFn m(N);
    for (std::size_t x = 1; x <= N; ++x) m.at(x, x) = 1;
    return m;
}

IncidenceFn incidence_convolve(const IncidenceFn& f, const IncidenceFn& g) {
    if (f.n != g.n) throw std::invalid_argument("incidence_convolve: size mismatch");
    const std::size_t N = f.n;
    IncidenceFn h(N);
    for (std::size_t x = 1; x <= N; ++x)
        for (std::size_t y = x; y <= N; ++y) {
            Rational s = 0;
            for (std::size_t z = x; z <= y; ++z) s += f.at(x, z) * g.at(z, y);
            h.at(x, y) = s;
        }
    return h;
}

IncidenceFn mobius_recurrence(std::size_t N) {
    if (N == 0) throw std::invalid_argument("mobius_recurrence: size must be positive");
    IncidenceFn m(N);
    std::vector<std::size_t> lv(N + 1);
    for (std::size_t x = 1; x <= N; ++x) lv[x] = level_of(x);
    for (std::size_t x = 1; x <= N; ++x) {
        m.at(x, x) = 1;
        for (std::size_t y = x + 1; y <= N; ++y) {
            // mu(x,y) = -sum over x <= z < y; the zeta factor keeps only the
            // z genuinely below y, and mu(x,z) vanishes unless z is above x.
            Rational s = 0;
            for (std::size_t z = x; z < y; ++z)
                if (lv[z] < lv[y]) s += m.at(x, z);
            m.at(x, y) = -s;
        }
    }
    return m;
}

mpz_class mobius_closed(std::size_t x, std::size_t y) {
    if (x == y) return 1;
    if (x > y) return 0;
    const std::size_t k = level_of(x);
    const std::size_t n = level_of(y);
    if (k == n) return 0;
    mpz_class prod = 1;
    for (std::size_t l = k + 1; l < n; ++l) prod *= 1 - fib(l);
    return -prod;
}

IncidenceFn mobius_closed_matrix(std::size_t N) {
    if (N == 0) throw std::invalid_argument("mobius_closed_matrix: size must be positive");
    IncidenceFn m(N);
    for (std::size_t x = 1; x <= N; ++x)
        for (std::size_t y = x; y <= N; ++y) m.at(x, y) = Rational(mobius_closed(x, y));
    return m;
}

IncidenceFn mobius_invert(std::size_t N) {
    const IncidenceFn z = zeta_matrix(N);
    IncidenceFn m(N);
    // Solve zeta * mu = delta column by column, substituting upward from the
    // unit diagonal: mu(x,y) = delta(x,y) - sum_{z > x} zeta(x,z) mu(z,y).
    for (std::size_t y = 1; y <= N; ++y)
        for (std::size_t x = y; x-- > 0;) {
            const std::size_t row = x + 1;
            Rational s = row == y ? 1 : 0;
            for (std::size_t mid = row + 1; mid <= y; ++mid)
                s -= z.at(row, mid) * m.at(mid, y);
            m.at(row, y) = s;
        }
    return m;
}

namespace {

using LevelWindows = std::vector<std::pair<std::size_t, std::size_t>>;

LevelWindows level_windows(const CobwebPrefix& p) {
    LevelWindows w(p.max_level + 1);
    for (std::size_t k = 1; k <= p.max_level; ++k) w[k] = {p.level_first(k), p.level_last(k)};
    return w;
}

// Walks chains one vertex per level, extending through every candidate on
// the next level that the order relation actually admits. The relation
// makes that every candidate, but the DFS tests zeta each time so the
// counts are evidence about the poset, not a product formula in disguise.
mpz_class chains_up_from(const LevelWindows& w, std::size_t v, std::size_t v_level,
                         std::size_t to_level) {
    if (v_level == to_level) return 1;
    mpz_class total = 0;
    const std::size_t next = v_level + 1;
    for (std::size_t cand = w[next].first; cand <= w[next].second; ++cand)
        if (zeta(v, cand) == 1) total += chains_up_from(w, cand, next, to_level);
    return total;
}

CobwebPrefix full_prefix(std::size_t levels) {
    const mpz_class top = fib(levels + 2) - 1;
    if (!top.fits_ulong_p()) throw std::overflow_error("cobweb: prefix too large");
    return CobwebPrefix(static_cast<std::size_t>(top.get_ui()));
}

}  // namespace

mpz_class count_max_chains_root(std::size_t n_level, std::size_t cap) {
    if (n_level == 0) throw std::invalid_argument("count_max_chains_root: level must be >= 1");
    if (n_level > cap)
        throw std::invalid_argument("count_max_chains_root: level exceeds brute-force cap");
    const CobwebPrefix p = full_prefix(n_level);
    const mpz_class count = chains_up_from(level_windows(p), 1, 1, n_level);
    if (count != f_factorial(n_level))
        throw std::logic_error("count_max_chains_root: count disagrees with the F-factorial");
    return count;
}

mpz_class count_chains_between(std::size_t k, std::size_t n, std::size_t cap) {
    if (k == 0 || k > n) throw std::invalid_argument("count_chains_between: need 1 <= k <= n");
    if (n > cap)
        throw std::invalid_argument("count_chains_between: level exceeds brute-force cap");
    const CobwebPrefix p = full_prefix(n);
    const LevelWindows w = level_windows(p);
    mpz_class count = -1;
    for (std::size_t base = w[k].first; base <= w[k].second; ++base) {
        const mpz_class c = chains_up_from(w, base, k, n);
        if (count < 0)
            count = c;
        else if (c != count)
            throw std::logic_error("count_chains_between: count depends on the base vertex");
    }
    if (count != f_falling(n, n - k))
        throw std::logic_error("count_chains_between: count disagrees with the falling product");
    return count;
}

mpz_class count_subposets(std::size_t k, std::size_t m, std::size_t cap) {
    if (k == 0 || m == 0) throw std::invalid_argument("count_subposets: need k, m >= 1");
    const std::size_t n = k + m;
    if (n > cap) throw std::invalid_argument("count_subposets: level exceeds brute-force cap");
    const mpz_class chains = count_chains_between(k, n, cap);
    const mpz_class block = f_factorial(m);
    if (!mpz_divisible_p(chains.get_mpz_t(), block.get_mpz_t()))
        throw std::logic_error("count_subposets: chain bundle size does not divide the count");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), chains.get_mpz_t(), block.get_mpz_t());
    if (q != fibonomial(n, m))
        throw std::logic_error("count_subposets: quotient disagrees with the fibonomial");
    return q;
}

}  // namespace fibcalc
