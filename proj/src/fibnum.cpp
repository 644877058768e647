#include "fibcalc/fibnum.hpp"

#include <stdexcept>

namespace fibcalc {

mpz_class FibTable::fib(std::size_t n) {
    while (cache_.size() <= n)
        cache_.push_back(cache_[cache_.size() - 1] + cache_[cache_.size() - 2]);
    return cache_[n];
}

mpz_class FibTable::f_factorial(std::size_t n) {
    mpz_class r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= fib(i);
    return r;
}

mpz_class FibTable::f_falling(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("f_falling: k exceeds n");
    mpz_class r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= fib(n - i);
    return r;
}

mpz_class FibTable::fibonomial(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("fibonomial: k exceeds n");
    mpz_class num = f_falling(n, k);
    mpz_class den = f_factorial(k);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("fibonomial: inexact division");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

FibTable& fib_table() {
    thread_local FibTable table;
    return table;
}

mpz_class fib(std::size_t n) { return fib_table().fib(n); }
mpz_class f_factorial(std::size_t n) { return fib_table().f_factorial(n); }
mpz_class f_falling(std::size_t n, std::size_t k) { return fib_table().f_falling(n, k); }
mpz_class fibonomial(std::size_t n, std::size_t k) { return fib_table().fibonomial(n, k); }

}  // namespace fibcalc
