#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace fibcalc {

// Memoized Fibonacci numbers plus the factorial-like products built from
// them. All results are exact arbitrary-precision integers; the factorials
// overflow 64 bits near n = 40, so there is no machine-word fast path.
//
// The table is append-only. Use one instance per thread (see fib_table()),
// or share a fully warmed instance read-only.
class FibTable {
public:
    mpz_class fib(std::size_t n);

    // F_n * F_{n-1} * ... * F_1, empty product for n = 0.
    mpz_class f_factorial(std::size_t n);

    // F_n * F_{n-1} * ... * F_{n-k+1}, the k-term falling product.
    // Rejects k > n: the value is never needed and has no agreed meaning.
    mpz_class f_falling(std::size_t n, std::size_t k);

    // F_n! / (F_k! F_{n-k}!), computed as f_falling(n,k) / F_k!.
    // The quotient is always an integer; an inexact division here would
    // mean the arithmetic above is broken, hence logic_error.
    mpz_class fibonomial(std::size_t n, std::size_t k);

private:
    std::vector<mpz_class> cache_{0, 1, 1};
};

// Per-thread default table.
FibTable& fib_table();

mpz_class fib(std::size_t n);
mpz_class f_factorial(std::size_t n);
mpz_class f_falling(std::size_t n, std::size_t k);
mpz_class fibonomial(std::size_t n, std::size_t k);

}  // namespace fibcalc
