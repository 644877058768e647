#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace fibcalc {

// Exact scalar: arbitrary-precision rational in lowest terms, positive
// denominator. GMP keeps arithmetic results canonical; only values built
// from raw integer pairs or strings need an explicit canonicalize().
using Rational = mpq_class;

// Parses "p", "-p" or "p/q". Rejects anything else, including q = 0.
Rational rational_from_string(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Dense polynomial in the formal parameter a over the rationals.
// coeffs()[i] multiplies a^i; no trailing zeros, zero polynomial is empty.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rational& c);
    ParamPoly(long c);
    explicit ParamPoly(std::vector<Rational> coeffs);

    static ParamPoly monomial(const Rational& c, std::size_t i);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& a0) const;
    ParamPoly pow(std::size_t e) const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(const ParamPoly& l, const ParamPoly& r);
    friend ParamPoly operator-(const ParamPoly& l, const ParamPoly& r);
    friend ParamPoly operator*(const ParamPoly& l, const ParamPoly& r);
    friend bool operator==(const ParamPoly& l, const ParamPoly& r) { return l.c_ == r.c_; }
    friend bool operator!=(const ParamPoly& l, const ParamPoly& r) { return !(l == r); }

private:
    std::vector<Rational> c_;
    void trim();
};

// Dense polynomial in x with ParamPoly coefficients: the working ring for
// every polynomial family here. coeff(j) multiplies x^j.
class XPoly {
public:
    XPoly() = default;
    XPoly(const ParamPoly& c);
    XPoly(long c);
    explicit XPoly(std::vector<ParamPoly> coeffs);

    static XPoly monomial(const ParamPoly& c, std::size_t j);
    static XPoly x_power(std::size_t j) { return monomial(ParamPoly(1), j); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    ParamPoly coeff(std::size_t j) const;
    const std::vector<ParamPoly>& coeffs() const { return c_; }

    // Exact value at x = x0, a = a0.
    Rational eval(const Rational& x0, const Rational& a0) const;

    // Pins the parameter, leaving a polynomial in x alone.
    XPoly substitute_a(const Rational& a0) const;

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(const XPoly& l, const XPoly& r);
    friend XPoly operator-(const XPoly& l, const XPoly& r);
    friend XPoly operator*(const XPoly& l, const XPoly& r);
    friend XPoly operator*(const ParamPoly& s, const XPoly& p);
    friend bool operator==(const XPoly& l, const XPoly& r) { return l.c_ == r.c_; }
    friend bool operator!=(const XPoly& l, const XPoly& r) { return !(l == r); }

private:
    std::vector<ParamPoly> c_;
    void trim();
};

// Canonical renderings. The XPoly form is the golden-file format: terms
// flattened to monomials q*a^i*x^j, descending in the x power and then in
// the a power, e.g. "x^3 - 4*a*x^2 + 2*a^2*x".
std::string render(const ParamPoly& p);
std::string render(const XPoly& p);

}  // namespace fibcalc
