#include "fibcalc/exactring.hpp"

#include <stdexcept>

namespace fibcalc {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    Rational q;
    try {
        q = Rational(text, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// --- ParamPoly ---------------------------------------------------------

ParamPoly::ParamPoly(const Rational& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

ParamPoly::ParamPoly(long c) : ParamPoly(Rational(c)) {}

ParamPoly::ParamPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

ParamPoly ParamPoly::monomial(const Rational& c, std::size_t i) {
    ParamPoly p;
    if (sgn(c) != 0) {
        p.c_.assign(i + 1, Rational(0));
        p.c_[i] = c;
    }
    return p;
}

void ParamPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational ParamPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
}

Rational ParamPoly::eval(const Rational& a0) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * a0 + c_[i];
    return r;
}

ParamPoly ParamPoly::pow(std::size_t e) const {
    ParamPoly r(1);
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly operator+(const ParamPoly& l, const ParamPoly& r) {
    ParamPoly s = l;
    s += r;
    return s;
}

ParamPoly operator-(const ParamPoly& l, const ParamPoly& r) {
    ParamPoly s = l;
    s -= r;
    return s;
}

ParamPoly operator*(const ParamPoly& l, const ParamPoly& r) {
    if (l.is_zero() || r.is_zero()) return ParamPoly();
    ParamPoly p;
    p.c_.assign(l.c_.size() + r.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < l.c_.size(); ++i)
        for (std::size_t j = 0; j < r.c_.size(); ++j)
            p.c_[i + j] += l.c_[i] * r.c_[j];
    p.trim();
    return p;
}

// --- XPoly --------------------------------------------------------------

XPoly::XPoly(const ParamPoly& c) {
    if (!c.is_zero()) c_.push_back(c);
}

XPoly::XPoly(long c) : XPoly(ParamPoly(c)) {}

XPoly::XPoly(std::vector<ParamPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

XPoly XPoly::monomial(const ParamPoly& c, std::size_t j) {
    XPoly p;
    if (!c.is_zero()) {
        p.c_.assign(j + 1, ParamPoly());
        p.c_[j] = c;
    }
    return p;
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ParamPoly XPoly::coeff(std::size_t j) const {
    return j < c_.size() ? c_[j] : ParamPoly();
}

Rational XPoly::eval(const Rational& x0, const Rational& a0) const {
    Rational r = 0;
    for (std::size_t j = c_.size(); j-- > 0;) r = r * x0 + c_[j].eval(a0);
    return r;
}

XPoly XPoly::substitute_a(const Rational& a0) const {
    std::vector<ParamPoly> out(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) out[j] = ParamPoly(c_[j].eval(a0));
    return XPoly(std::move(out));
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) { return *this += -o; }

XPoly operator+(const XPoly& l, const XPoly& r) {
    XPoly s = l;
    s += r;
    return s;
}

XPoly operator-(const XPoly& l, const XPoly& r) {
    XPoly s = l;
    s -= r;
    return s;
}

XPoly operator*(const XPoly& l, const XPoly& r) {
    if (l.is_zero() || r.is_zero()) return XPoly();
    XPoly p;
    p.c_.assign(l.c_.size() + r.c_.size() - 1, ParamPoly());
    for (std::size_t i = 0; i < l.c_.size(); ++i)
        for (std::size_t j = 0; j < r.c_.size(); ++j)
            p.c_[i + j] += l.c_[i] * r.c_[j];
    p.trim();
    return p;
}

XPoly operator*(const ParamPoly& s, const XPoly& p) {
    XPoly r = p;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
}

// --- rendering ----------------------------------------------------------

namespace {

std::string monomial_text(const Rational& mag, int apow, int xpow) {
    std::string s;
    if (mag != 1 || (apow == 0 && xpow == 0)) s = to_string(mag);
    auto append = [&s](const std::string& factor) {
        if (!s.empty()) s += "*";
        s += factor;
    };
    if (apow == 1) append("a");
    else if (apow > 1) append("a^" + std::to_string(apow));
    if (xpow == 1) append("x");
    else if (xpow > 1) append("x^" + std::to_string(xpow));
    return s;
}

}  // namespace

std::string render(const XPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int j = p.degree(); j >= 0; --j) {
        ParamPoly pc = p.coeff(static_cast<std::size_t>(j));
        for (int i = pc.degree(); i >= 0; --i) {
            Rational q = pc.coeff(static_cast<std::size_t>(i));
            if (sgn(q) == 0) continue;
            bool neg = sgn(q) < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            out += monomial_text(abs(q), i, j);
        }
    }
    return out;
}

std::string render(const ParamPoly& p) { return render(XPoly(p)); }

}  // namespace fibcalc
