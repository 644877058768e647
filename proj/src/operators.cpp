#include "fibcalc/operators.hpp"

#include <stdexcept>

#include "fibcalc/fibnum.hpp"

namespace fibcalc {

namespace {

void trim(std::vector<ParamPoly>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

Rational inv_f_factorial(std::size_t k) {
    Rational r(mpz_class(1), f_factorial(k));
    r.canonicalize();
    return r;
}

}  // namespace

OpSeries::OpSeries(std::vector<ParamPoly> coeffs, int trunc_order) {
    trim(coeffs);
    if (trunc_order < 0) throw std::invalid_argument("op series: negative truncation order");
    if (coeffs.size() > static_cast<std::size_t>(trunc_order) + 1)
        throw std::invalid_argument("op series: more coefficients than the truncation order admits");
    c = std::move(coeffs);
    trunc = trunc_order;
}

ParamPoly OpSeries::coeff(std::size_t k) const {
    return k < c.size() ? c[k] : ParamPoly();
}

PhiSeries::PhiSeries(std::vector<ParamPoly> coeffs, int trunc_order) {
    trim(coeffs);
    if (trunc_order < 0) throw std::invalid_argument("phi series: negative truncation order");
    if (coeffs.size() > static_cast<std::size_t>(trunc_order) + 1)
        throw std::invalid_argument("phi series: more coefficients than the truncation order admits");
    a = std::move(coeffs);
    trunc = trunc_order;
}

ParamPoly PhiSeries::coeff(std::size_t k) const {
    return k < a.size() ? a[k] : ParamPoly();
}

OpSeries op_zero(int trunc) { return OpSeries({}, trunc); }

OpSeries op_identity(int trunc) { return OpSeries({ParamPoly(1)}, trunc); }

OpSeries op_f_derivative(int trunc) {
    return OpSeries({ParamPoly(), ParamPoly(1)}, trunc);
}

OpSeries op_translation(const ParamPoly& y, int trunc) {
    std::vector<ParamPoly> c(static_cast<std::size_t>(trunc) + 1);
    ParamPoly ypow(1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(trunc); ++k) {
        c[k] = ParamPoly(inv_f_factorial(k)) * ypow;
        ypow = ypow * y;
    }
    return OpSeries(std::move(c), trunc);
}

OpSeries op_forward_difference(int trunc) {
    OpSeries e = op_translation(ParamPoly(1), trunc);
    return op_add(e, op_scale(ParamPoly(-1), op_identity(trunc)));
}

OpSeries op_backward_difference(int trunc) {
    OpSeries e = op_translation(ParamPoly(-1), trunc);
    return op_add(op_identity(trunc), op_scale(ParamPoly(-1), e));
}

OpSeries op_abel(const ParamPoly& a, int trunc) {
    std::vector<ParamPoly> c(static_cast<std::size_t>(trunc) + 1);
    ParamPoly apow(1);
    for (std::size_t k = 0; k + 1 <= static_cast<std::size_t>(trunc); ++k) {
        c[k + 1] = ParamPoly(inv_f_factorial(k)) * apow;
        apow = apow * a;
    }
    return OpSeries(std::move(c), trunc);
}

OpSeries op_laguerre(int trunc) {
    std::vector<ParamPoly> c(static_cast<std::size_t>(trunc) + 1);
    for (std::size_t k = 1; k <= static_cast<std::size_t>(trunc); ++k) c[k] = ParamPoly(-1);
    return OpSeries(std::move(c), trunc);
}

XPoly f_derivative(const XPoly& p) {
    if (p.degree() < 1) return XPoly();
    std::vector<ParamPoly> out(static_cast<std::size_t>(p.degree()));
    for (std::size_t j = 1; j <= static_cast<std::size_t>(p.degree()); ++j)
        out[j - 1] = ParamPoly(Rational(fib(j))) * p.coeff(j);
    return XPoly(std::move(out));
}

XPoly apply_op(const OpSeries& T, const XPoly& p) {
    if (p.degree() > T.trunc)
        throw std::invalid_argument("apply_op: polynomial degree exceeds truncation order");
    XPoly result;
    XPoly dp = p;
    for (std::size_t k = 0; k < T.c.size() && !dp.is_zero(); ++k) {
        result += T.c[k] * dp;
        dp = f_derivative(dp);
    }
    return result;
}

XPoly translate(const XPoly& p, const ParamPoly& y) {
    XPoly result;
    XPoly dp = p;
    ParamPoly ypow(1);
    for (std::size_t k = 0; !dp.is_zero(); ++k) {
        result += (ParamPoly(inv_f_factorial(k)) * ypow) * dp;
        dp = f_derivative(dp);
        ypow = ypow * y;
    }
    return result;
}

OpSeries op_compose(const OpSeries& T, const OpSeries& U) {
    int trunc = std::min(T.trunc, U.trunc);
    std::vector<ParamPoly> c(static_cast<std::size_t>(trunc) + 1);
    for (std::size_t i = 0; i < T.c.size(); ++i) {
        if (T.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < U.c.size(); ++j) {
            if (i + j > static_cast<std::size_t>(trunc)) break;
            c[i + j] += T.c[i] * U.c[j];
        }
    }
    return OpSeries(std::move(c), trunc);
}

OpSeries op_add(const OpSeries& T, const OpSeries& U) {
    int trunc = std::min(T.trunc, U.trunc);
    std::vector<ParamPoly> c(static_cast<std::size_t>(trunc) + 1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(trunc); ++k)
        c[k] = T.coeff(k) + U.coeff(k);
    return OpSeries(std::move(c), trunc);
}

OpSeries op_scale(const ParamPoly& s, const OpSeries& T) {
    std::vector<ParamPoly> c = T.c;
    for (auto& ck : c) ck = s * ck;
    return OpSeries(std::move(c), T.trunc);
}

OpSeries op_invert(const OpSeries& T) {
    ParamPoly c0 = T.coeff(0);
    if (c0.is_zero()) throw std::invalid_argument("op_invert: zero constant term");
    if (!c0.is_constant())
        throw std::invalid_argument("op_invert: constant term must not depend on the parameter");
    Rational inv0 = 1 / c0.coeff(0);
    std::vector<ParamPoly> d(static_cast<std::size_t>(T.trunc) + 1);
    d[0] = ParamPoly(inv0);
    for (std::size_t k = 1; k <= static_cast<std::size_t>(T.trunc); ++k) {
        ParamPoly acc;
        for (std::size_t j = 1; j <= k; ++j) acc += T.coeff(j) * d[k - j];
        d[k] = ParamPoly(-inv0) * acc;
    }
    return OpSeries(std::move(d), T.trunc);
}

bool is_delta_op(const OpSeries& T) {
    return T.coeff(0).is_zero() && !T.coeff(1).is_zero();
}

PhiSeries phi_mul(const PhiSeries& f, const PhiSeries& g) {
    int trunc = std::min(f.trunc, g.trunc);
    std::vector<ParamPoly> c(static_cast<std::size_t>(trunc) + 1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(trunc); ++k)
        for (std::size_t l = 0; l <= k; ++l)
            c[k] += ParamPoly(Rational(fibonomial(k, l))) * (f.coeff(l) * g.coeff(k - l));
    return PhiSeries(std::move(c), trunc);
}

OpSeries phi_to_op(const PhiSeries& f, const OpSeries& Q) {
    if (!is_delta_op(Q)) throw std::invalid_argument("phi_to_op: not a delta operator");
    int trunc = std::min(f.trunc, Q.trunc);
    OpSeries acc = op_zero(trunc);
    OpSeries qpow = op_identity(trunc);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(trunc); ++k) {
        if (k > 0) qpow = op_compose(qpow, Q);
        ParamPoly s = ParamPoly(inv_f_factorial(k)) * f.coeff(k);
        if (!s.is_zero()) acc = op_add(acc, op_scale(s, qpow));
    }
    return acc;
}

PhiSeries expand_in_delta(const OpSeries& T, const OpSeries& Q,
                          const std::vector<XPoly>& q_basis) {
    if (!is_delta_op(Q)) throw std::invalid_argument("expand_in_delta: not a delta operator");
    if (q_basis.size() < static_cast<std::size_t>(T.trunc) + 1)
        throw std::invalid_argument("expand_in_delta: basis shorter than the truncation order");
    std::vector<ParamPoly> a(static_cast<std::size_t>(T.trunc) + 1);
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (q_basis[n].degree() != static_cast<int>(n))
            throw std::invalid_argument("expand_in_delta: basis entry has wrong degree");
        a[n] = apply_op(T, q_basis[n]).coeff(0);
    }
    return PhiSeries(std::move(a), T.trunc);
}

OpSeries parse_operator(const std::string& literal, int trunc) {
    if (literal == "dF") return op_f_derivative(trunc);
    if (literal == "deltaF") return op_forward_difference(trunc);
    if (literal == "nablaF") return op_backward_difference(trunc);
    if (literal == "laguerre") return op_laguerre(trunc);
    if (literal.rfind("abel:", 0) == 0) {
        std::string arg = literal.substr(5);
        if (arg == "a") return op_abel(ParamPoly::monomial(Rational(1), 1), trunc);
        if (arg.rfind("a=", 0) == 0)
            return op_abel(ParamPoly(rational_from_string(arg.substr(2))), trunc);
        throw std::invalid_argument("operator literal: expected abel:a or abel:a=<rational>");
    }
    if (literal.rfind("series:[", 0) == 0 && literal.back() == ']') {
        std::string body = literal.substr(8, literal.size() - 9);
        std::vector<ParamPoly> c;
        if (!body.empty()) {
            std::size_t pos = 0;
            while (true) {
                std::size_t comma = body.find(',', pos);
                std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                               : comma - pos);
                c.emplace_back(rational_from_string(item));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        return OpSeries(std::move(c), trunc);
    }
    throw std::invalid_argument("unknown operator literal '" + literal + "'");
}

}  // namespace fibcalc
