#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fibcalc/exactring.hpp"

namespace fibcalc {

inline constexpr int kDefaultTrunc = 16;

// Truncated formal series T = sum_k c_k D^k in the base degree-lowering
// operator D (the F-derivative, D x^n = F_n x^{n-1}). Coefficients beyond
// trunc are unknown rather than zero: applying T to a polynomial of degree
// <= trunc is exact, deeper input is rejected. Coefficients live in Q[a] so
// parameterized operators stay symbolic.
struct OpSeries {
    OpSeries() = default;
    OpSeries(std::vector<ParamPoly> coeffs, int trunc_order);

    ParamPoly coeff(std::size_t k) const;

    std::vector<ParamPoly> c;
    int trunc = kDefaultTrunc;

    friend bool operator==(const OpSeries& l, const OpSeries& r) {
        return l.trunc == r.trunc && l.c == r.c;
    }
    friend bool operator!=(const OpSeries& l, const OpSeries& r) { return !(l == r); }
};

// Coefficient sequence {a_k} of a formal series sum_k a_k t^k / F_k!, the
// convolution-algebra side of the operator/series correspondence.
struct PhiSeries {
    PhiSeries() = default;
    PhiSeries(std::vector<ParamPoly> coeffs, int trunc_order);

    ParamPoly coeff(std::size_t k) const;

    std::vector<ParamPoly> a;
    int trunc = kDefaultTrunc;

    friend bool operator==(const PhiSeries& l, const PhiSeries& r) {
        return l.trunc == r.trunc && l.a == r.a;
    }
    friend bool operator!=(const PhiSeries& l, const PhiSeries& r) { return !(l == r); }
};

// Named operators.
OpSeries op_zero(int trunc = kDefaultTrunc);
OpSeries op_identity(int trunc = kDefaultTrunc);
OpSeries op_f_derivative(int trunc = kDefaultTrunc);
// E^y = sum_k y^k D^k / F_k!, the generalized-translation series.
OpSeries op_translation(const ParamPoly& y, int trunc = kDefaultTrunc);
// E^1 - I and I - E^{-1}.
OpSeries op_forward_difference(int trunc = kDefaultTrunc);
OpSeries op_backward_difference(int trunc = kDefaultTrunc);
// D E^a: coefficient a^k/F_k! on D^{k+1}.
OpSeries op_abel(const ParamPoly& a, int trunc = kDefaultTrunc);
// D/(D - I) = -sum_{k>=0} D^{k+1}. The geometric expansion forces the
// minus sign; see the Laguerre notes in the families module.
OpSeries op_laguerre(int trunc = kDefaultTrunc);

XPoly f_derivative(const XPoly& p);

// sum_k c_k D^k p, exact; rejects deg(p) > T.trunc.
XPoly apply_op(const OpSeries& T, const XPoly& p);

// p(x shifted by y): sum_k (y^k/F_k!) D^k p. Computed directly on p, so it
// is exact for any degree; no truncation is involved.
XPoly translate(const XPoly& p, const ParamPoly& y);

// Product in the operator algebra. Power series in D commute, so one
// routine covers both orders; result is truncated to min(T.trunc, U.trunc).
OpSeries op_compose(const OpSeries& T, const OpSeries& U);
OpSeries op_add(const OpSeries& T, const OpSeries& U);
OpSeries op_scale(const ParamPoly& s, const OpSeries& T);

// Series inverse: op_compose(T, op_invert(T)) = identity up to trunc.
// Requires the constant term to be a nonzero rational constant.
OpSeries op_invert(const OpSeries& T);

// Delta operator: no constant term, nonzero linear term.
bool is_delta_op(const OpSeries& T);

// Fibonomial convolution: c_k = sum_l fibonomial(k,l) a_l b_{k-l}.
PhiSeries phi_mul(const PhiSeries& f, const PhiSeries& g);

// sum_k (a_k/F_k!) Q^k with powers of the delta operator Q expanded and
// truncated to min(f.trunc, Q.trunc).
OpSeries phi_to_op(const PhiSeries& f, const OpSeries& Q);

// First-expansion coefficients of T in the delta operator Q whose basic
// sequence is q_basis: a_n = constant term of T q_n. The basis must cover
// 0..T.trunc with deg q_n = n.
PhiSeries expand_in_delta(const OpSeries& T, const OpSeries& Q,
                          const std::vector<XPoly>& q_basis);

// CLI literals: "dF", "deltaF", "nablaF", "abel:a", "abel:a=<rational>",
// "laguerre", "series:[c0,c1,...]".
OpSeries parse_operator(const std::string& literal, int trunc = kDefaultTrunc);

}  // namespace fibcalc
