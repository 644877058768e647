#include "fibcalc/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "fibcalc/fibnum.hpp"

namespace fibcalc {

namespace {

Rational ratio(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string op_text(const OpSeries& T) {
    std::string s = "series:[";
    for (std::size_t k = 0; k < T.c.size(); ++k) {
        if (k) s += ", ";
        s += render(T.c[k]);
    }
    return s + "]";
}

}  // namespace

PolySequence basic_sequence(const OpSeries& Q, std::size_t n_max) {
    if (!is_delta_op(Q))
        throw std::invalid_argument("basic_sequence: operator is not a delta operator");
    const ParamPoly c1 = Q.coeff(1);
    if (!c1.is_constant())
        throw std::invalid_argument(
            "basic_sequence: linear coefficient must be a rational constant");
    if (Q.trunc < static_cast<int>(n_max))
        throw std::invalid_argument("basic_sequence: truncation order below requested degree");
    const Rational c1v = c1.coeff(0);

    PolySequence seq;
    seq.kind = "basic";
    seq.operator_tag = "Q=" + op_text(Q);
    seq.terms.reserve(n_max + 1);
    seq.terms.emplace_back(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const XPoly& prev = seq.terms.back();
        // Solve Q q_n = F_n q_{n-1} with q_n(0) = 0 for q_n = sum b_j x^j.
        // Matching x^m coefficients gives
        //   sum_{j=m+1..n} b_j c_{j-m} falling(j, j-m) = F_n [x^m] q_{n-1},
        // upper-triangular in b with diagonal c_1 F_{m+1}, solved top down.
        std::vector<ParamPoly> b(n + 1);
        for (std::size_t m = n; m-- > 0;) {
            ParamPoly rhs = ParamPoly(Rational(fib(n))) * prev.coeff(m);
            for (std::size_t j = m + 2; j <= n; ++j)
                rhs -= b[j] * Q.coeff(j - m) * ParamPoly(Rational(f_falling(j, j - m)));
            b[m + 1] = rhs * ParamPoly(Rational(1) / (c1v * Rational(fib(m + 1))));
        }
        seq.terms.emplace_back(std::move(b));
    }
    return seq;
}

PolySequence sheffer_sequence(const OpSeries& Q, const OpSeries& S, std::size_t n_max) {
    if (S.trunc < static_cast<int>(n_max))
        throw std::invalid_argument("sheffer_sequence: truncation order below requested degree");
    const OpSeries sinv = op_invert(S);  // also validates invertibility
    PolySequence seq = basic_sequence(Q, n_max);
    seq.kind = "sheffer";
    seq.operator_tag += " ; S=" + op_text(S);
    for (auto& t : seq.terms) t = apply_op(sinv, t);
    return seq;
}

XPoly abel_closed(std::size_t n) {
    if (n == 0) return XPoly(1);
    const Rational pre = ratio(fib(n), mpz_class(n));
    XPoly p;
    mpz_class neg_n_pow = 1;  // (-n)^k
    for (std::size_t k = 0; k < n; ++k) {
        Rational c = pre;
        c *= Rational(fibonomial(n - 1, k));
        c *= Rational(neg_n_pow);
        c *= ratio(mpz_class(n - k), fib(n - k));
        p += XPoly::monomial(ParamPoly::monomial(c, k), n - k);
        neg_n_pow *= -static_cast<long>(n);
    }
    return p;
}

XPoly laguerre_basic_closed(std::size_t n) {
    if (n == 0) return XPoly(1);
    const Rational pre = ratio(fib(n), mpz_class(n));
    XPoly p;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational c = pre;
        c *= ratio(f_factorial(n), f_factorial(k));
        c *= Rational(fibonomial(n - 1, k - 1));
        c *= ratio(mpz_class(k), fib(k));
        if (k % 2 == 1) c = -c;
        p += XPoly::monomial(ParamPoly(c), k);
    }
    return p;
}

XPoly hermite_closed(std::size_t n) {
    XPoly p;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        mpz_class den = f_factorial(k);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);  // den *= 2^k
        Rational c = ratio(f_falling(n, 2 * k), den);
        if (k % 2 == 1) c = -c;
        p += XPoly::monomial(ParamPoly::monomial(c, k), n - 2 * k);
    }
    return p;
}

XPoly laguerre_alpha_closed(std::size_t n, long alpha) {
    if (alpha < 0)
        throw std::invalid_argument("laguerre_alpha_closed: alpha must be nonnegative");
    XPoly p;
    for (std::size_t k = 0; k <= n; ++k) {
        Rational c = ratio(f_factorial(n), f_factorial(k));
        c *= Rational(fibonomial(static_cast<std::size_t>(alpha) + n, n - k));
        if (k % 2 == 1) c = -c;
        p += XPoly::monomial(ParamPoly(c), k);
    }
    return p;
}

XPoly bernoulli_closed(std::size_t n) {
    XPoly p;
    for (std::size_t k = 0; k <= n; ++k)
        p += XPoly::monomial(ParamPoly(ratio(fibonomial(n, k), fib(k + 1))), n - k);
    return p;
}

OpSeries bernoulli_inverse_op(int trunc) {
    std::vector<ParamPoly> c;
    c.reserve(static_cast<std::size_t>(trunc) + 1);
    for (int j = 0; j <= trunc; ++j)
        c.emplace_back(ratio(mpz_class(1), f_factorial(static_cast<std::size_t>(j) + 1)));
    return OpSeries(std::move(c), trunc);
}

OpSeries hermite_inverse_op(int trunc) {
    std::vector<ParamPoly> c(static_cast<std::size_t>(trunc) + 1);
    for (int k = 0; 2 * k <= trunc; ++k) {
        mpz_class den = f_factorial(static_cast<std::size_t>(k));
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<std::size_t>(k));
        Rational v = ratio(mpz_class(1), den);
        if (k % 2 == 1) v = -v;
        c[static_cast<std::size_t>(2 * k)] = ParamPoly::monomial(v, static_cast<std::size_t>(k));
    }
    return OpSeries(std::move(c), trunc);
}

OpSeries laguerre_alpha_s_op(long alpha, int trunc) {
    if (alpha < 0)
        throw std::invalid_argument("laguerre_alpha_s_op: alpha must be nonnegative");
    const OpSeries base({ParamPoly(1), ParamPoly(-1)}, trunc);  // I - D
    OpSeries pw = op_identity(trunc);
    for (long i = 0; i <= alpha; ++i) pw = op_compose(pw, base);
    return op_invert(pw);
}

namespace {

void compare_columns(DiscrepancyReport& rep, const std::string& family,
                     const std::string& lhs_source, const std::vector<XPoly>& lhs,
                     const std::string& rhs_source, const std::vector<XPoly>& rhs,
                     std::size_t n_max) {
    const std::size_t hi = std::min({n_max + 1, lhs.size(), rhs.size()});
    for (std::size_t n = 0; n < hi; ++n) {
        if (lhs[n] == rhs[n]) continue;
        rep.entries.push_back(
            {family, n, lhs_source, rhs_source, lhs[n], rhs[n], lhs[n] - rhs[n]});
    }
}

}  // namespace

DiscrepancyReport verify_families(std::size_t n_max) {
    return verify_families(n_max, {"all"});
}

DiscrepancyReport verify_families(std::size_t n_max, const std::vector<std::string>& families) {
    static const std::vector<std::string> kOrder = {"abel", "laguerre", "laguerre-alpha",
                                                    "bernoulli", "hermite"};
    std::set<std::string> want;
    for (const auto& f : families) {
        if (f == "all") {
            want.insert(kOrder.begin(), kOrder.end());
            continue;
        }
        if (std::find(kOrder.begin(), kOrder.end(), f) == kOrder.end())
            throw std::invalid_argument("verify_families: unknown family '" + f + "'");
        want.insert(f);
    }

    const int trunc = std::max(kDefaultTrunc, static_cast<int>(n_max));
    DiscrepancyReport rep;
    for (const auto& name : kOrder) {
        if (!want.count(name)) continue;
        const std::vector<XPoly>* listing = nullptr;
        std::vector<XPoly> closed, solver;
        closed.reserve(n_max + 1);
        if (name == "abel") {
            listing = &abel_listing();
            for (std::size_t n = 0; n <= n_max; ++n) closed.push_back(abel_closed(n));
            solver = basic_sequence(op_abel(ParamPoly::monomial(1, 1), trunc), n_max).terms;
        } else if (name == "laguerre") {
            listing = &laguerre_listing();
            for (std::size_t n = 0; n <= n_max; ++n) closed.push_back(laguerre_basic_closed(n));
            solver = basic_sequence(op_laguerre(trunc), n_max).terms;
        } else if (name == "laguerre-alpha") {
            listing = &laguerre_alpha1_listing();
            for (std::size_t n = 0; n <= n_max; ++n) closed.push_back(laguerre_alpha_closed(n, 1));
            solver =
                sheffer_sequence(op_laguerre(trunc), laguerre_alpha_s_op(1, trunc), n_max).terms;
        } else if (name == "bernoulli") {
            listing = &bernoulli_listing();
            for (std::size_t n = 0; n <= n_max; ++n) closed.push_back(bernoulli_closed(n));
            solver = sheffer_sequence(op_f_derivative(trunc),
                                      op_invert(bernoulli_inverse_op(trunc)), n_max)
                         .terms;
        } else {  // hermite: no reference listing to compare against
            for (std::size_t n = 0; n <= n_max; ++n) closed.push_back(hermite_closed(n));
            solver = sheffer_sequence(op_f_derivative(trunc),
                                      op_invert(hermite_inverse_op(trunc)), n_max)
                         .terms;
        }
        if (listing) {
            compare_columns(rep, name, "listing", *listing, "closed-form", closed, n_max);
            compare_columns(rep, name, "listing", *listing, "solver", solver, n_max);
        }
        compare_columns(rep, name, "closed-form", closed, "solver", solver, n_max);
    }
    return rep;
}

}  // namespace fibcalc
