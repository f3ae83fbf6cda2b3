#include "k3fm/scalar.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "k3fm/errors.hpp"

namespace k3fm {

// ---------------------------------------------------------------------------
// GaussRational

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

GaussRational GaussRational::inverse() const {
    if (is_zero()) {
        throw NonUnitDivisor("division by zero in Q(i)");
    }
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussRational GaussRational::pow(int exponent) const {
    GaussRational base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? -static_cast<long>(exponent) : exponent;
    GaussRational result(1);
    while (e > 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

std::string GaussRational::to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = im_.get_str() + "*i";
    }
    if (sgn(re_) == 0) return imag;
    std::string out = "(" + re_.get_str();
    if (sgn(im_) > 0) out += "+";
    return out + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.to_string(); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const GaussRational& c) {
    if (!c.is_zero()) terms_.emplace(Exponent{0, 0, 0}, c);
}

Scalar Scalar::monomial(const GaussRational& c, Exponent e) {
    Scalar s;
    s.add_term(e, c);
    return s;
}

void Scalar::add_term(const Exponent& e, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0});
}

GaussRational Scalar::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRational() : it->second;
}

int Scalar::max_exponent(Var v) const {
    int best = std::numeric_limits<int>::min();
    for (const auto& [e, c] : terms_) best = std::max(best, e[static_cast<int>(v)]);
    return terms_.empty() ? 0 : best;
}

int Scalar::min_exponent(Var v) const {
    int best = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) best = std::min(best, e[static_cast<int>(v)]);
    return terms_.empty() ? 0 : best;
}

Scalar Scalar::conj() const {
    Scalar out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e[0], e[2], e[1]}, c.conj());
    return out;
}

Scalar Scalar::pow(int exponent) const {
    if (exponent < 0) return Scalar(1) / pow(-exponent);
    Scalar result(1);
    Scalar base = *this;
    unsigned e = static_cast<unsigned>(exponent);
    while (e > 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        }
    }
    return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::operator-() const {
    Scalar out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (!b.is_monomial()) {
        throw NonUnitDivisor("divisor '" + b.to_string() + "' is not a Laurent monomial");
    }
    const auto& [eb, cb] = *b.terms_.begin();
    GaussRational inv = cb.inverse();
    Scalar out;
    for (const auto& [e, c] : a.terms_) {
        out.terms_.emplace(Exponent{e[0] - eb[0], e[1] - eb[1], e[2] - eb[2]}, c * inv);
    }
    return out;
}

namespace {

GaussRational power_at(const GaussRational& base, int exponent, const char* name) {
    if (exponent < 0 && base.is_zero()) {
        throw PoleAtSample(std::string("negative power of ") + name + " evaluated at 0");
    }
    return base.pow(exponent);
}

} // namespace

GaussRational Scalar::eval(const Rational& t0, const GaussRational& z0) const {
    GaussRational sum;
    GaussRational tg(t0);
    GaussRational zb = z0.conj();
    for (const auto& [e, c] : terms_) {
        sum += c * power_at(tg, e[0], "t") * power_at(z0, e[1], "zeta") * power_at(zb, e[2], "zetabar");
    }
    return sum;
}

Scalar Scalar::substitute(const Rational& t0, const GaussRational& z0) const { return Scalar(eval(t0, z0)); }

Scalar Scalar::substitute_t(const Rational& t0) const {
    GaussRational tg(t0);
    Scalar out;
    for (const auto& [e, c] : terms_) out.add_term({0, e[1], e[2]}, c * power_at(tg, e[0], "t"));
    return out;
}

Scalar Scalar::leading_part(Var v) const {
    if (is_zero()) return {};
    int top = max_exponent(v);
    int idx = static_cast<int>(v);
    Scalar out;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != top) continue;
        Exponent shifted = e;
        shifted[idx] = 0;
        out.add_term(shifted, c);
    }
    return out;
}

namespace {

void append_power(std::string& out, const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
}

} // namespace

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending lexicographic order on (t, zeta, zetabar) exponents.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        append_power(mono, "t", e[0]);
        append_power(mono, "zeta", e[1]);
        append_power(mono, "zetabar", e[2]);

        bool negative = c.is_real() && sgn(c.re()) < 0;
        GaussRational shown = negative ? -c : c;
        std::string coef = shown.to_string();
        std::string term;
        if (mono.empty()) {
            term = coef;
        } else if (shown == GaussRational(1)) {
            term = mono;
        } else {
            term = coef + "*" + mono;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    }
    return {};
}

Scalar scalar_div_unit(const Scalar& a, const Scalar& b) { return a / b; }

GaussRational scalar_eval(const Scalar& a, const Rational& t0, const GaussRational& z0) { return a.eval(t0, z0); }

} // namespace k3fm
