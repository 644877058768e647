#include "fibcalc/fibnum.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace fibcalc;

TEST_SUITE("fibnum") {

TEST_CASE("fib: base cases and spot values") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(2) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(20) == 6765);
    CHECK(fib(30) == 832040);
}

TEST_CASE("fib: recurrence up to 500") {
    for (std::size_t n = 0; n + 2 <= 500; ++n)
        CHECK(fib(n + 2) == fib(n + 1) + fib(n));
}

TEST_CASE("fib: Binet nearest-integer cross-check up to 70") {
    const double sqrt5 = std::sqrt(5.0);
    const double phi = (1.0 + sqrt5) / 2.0;
    for (std::size_t n = 1; n <= 70; ++n) {
        double approx = std::round(std::pow(phi, static_cast<double>(n)) / sqrt5);
        mpz_class expected(static_cast<long>(approx));
        CHECK(fib(n) == expected);
    }
}

TEST_CASE("fib: prefix sums telescope, k up to 200") {
    mpz_class sum = 0;
    for (std::size_t k = 1; k <= 200; ++k) {
        sum += fib(k);
        CHECK(sum == fib(k + 2) - 1);
    }
}

TEST_CASE("f_factorial: spot values") {
    CHECK(f_factorial(0) == 1);
    CHECK(f_factorial(1) == 1);
    CHECK(f_factorial(4) == 6);
    CHECK(f_factorial(5) == 30);
    CHECK(f_factorial(6) == 240);
    CHECK(f_factorial(7) == 3120);
    CHECK(f_factorial(8) == 65520);
    CHECK(f_factorial(9) == 2227680);
    // past the 64-bit range
    mpz_class two64 = mpz_class(1) << 64;
    CHECK(f_factorial(40) > two64);
}

TEST_CASE("f_falling: spot values and edge cases") {
    CHECK(f_falling(5, 0) == 1);
    CHECK(f_falling(5, 2) == 15);
    CHECK(f_falling(5, 5) == 30);
    CHECK(f_falling(5, 5) == f_factorial(5));
    CHECK(f_falling(0, 0) == 1);
    CHECK_THROWS_AS(f_falling(3, 4), std::invalid_argument);
}

TEST_CASE("fibonomial: spot values") {
    CHECK(fibonomial(0, 0) == 1);
    CHECK(fibonomial(7, 0) == 1);
    CHECK(fibonomial(5, 2) == 15);
    CHECK(fibonomial(6, 3) == 60);
    const long row7[] = {1, 13, 104, 260, 260, 104, 13, 1};
    for (std::size_t k = 0; k <= 7; ++k)
        CHECK(fibonomial(7, k) == row7[k]);
    CHECK_THROWS_AS(fibonomial(4, 5), std::invalid_argument);
}

TEST_CASE("fibonomial: independent rational-product oracle") {
    // prod_{i=1..k} F_{n-i+1} / F_i, reduced as an exact rational; the
    // result must land on an integer equal to the fibonomial.
    for (std::size_t n = 0; n <= 30; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            mpq_class prod = 1;
            for (std::size_t i = 1; i <= k; ++i) {
                prod *= mpq_class(fib(n - i + 1), fib(i));
                prod.canonicalize();
            }
            REQUIRE(prod.get_den() == 1);
            CHECK(fibonomial(n, k) == prod.get_num());
        }
    }
}

TEST_CASE("fibonomial: symmetry and integrality up to 60") {
    for (std::size_t n = 0; n <= 60; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            mpz_class v;
            CHECK_NOTHROW(v = fibonomial(n, k));
            CHECK(v == fibonomial(n, n - k));
            CHECK(v > 0);
        }
}

TEST_CASE("f_falling factors through the fibonomial") {
    for (std::size_t n = 0; n <= 25; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(f_falling(n, k) == fibonomial(n, k) * f_factorial(k));
}

TEST_CASE("FibTable instances are independent") {
    FibTable a, b;
    CHECK(a.fib(40) == b.fib(40));
    CHECK(a.fibonomial(12, 6) == b.fibonomial(12, 6));
}

}  // TEST_SUITE
