#pragma once

#include <array>
#include <compare>
#include <map>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace k3fm {

using Rational = mpq_class;

/// Exact element of Q(i), kept in lowest terms by GMP.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long n) : re_(n) {}
    GaussRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRational i() { return {0, 1}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussRational conj() const { return {re_, -im_}; }
    /// |z|^2, always rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// Throws NonUnitDivisor on zero.
    GaussRational inverse() const;
    GaussRational pow(int exponent) const;

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    GaussRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Canonical text: `3/2`, `-i`, `2/3*i`, `(1/2+1/3*i)`. Parseable by the scalar grammar.
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

/// Exponents of (t, zeta, zetabar) in a Laurent monomial.
using Exponent = std::array<int, 3>;

enum class Var { T = 0, Zeta = 1, ZetaBar = 2 };

/// Laurent polynomial in t, zeta, zetabar over Q(i).
///
/// zeta and zetabar are independent formal variables tied together only by
/// conj(), which swaps their exponents and conjugates coefficients; t is
/// self-conjugate. Terms with zero coefficient are never stored, so two
/// scalars are equal iff their term maps are equal.
class Scalar {
public:
    using Terms = std::map<Exponent, GaussRational>;

    Scalar() = default;
    Scalar(long n) : Scalar(GaussRational(n)) {}
    Scalar(const Rational& q) : Scalar(GaussRational(q)) {}
    Scalar(const GaussRational& c);

    static Scalar monomial(const GaussRational& c, Exponent e);
    static Scalar t() { return monomial(1, {1, 0, 0}); }
    static Scalar zeta() { return monomial(1, {0, 1, 0}); }
    static Scalar zetabar() { return monomial(1, {0, 0, 1}); }
    static Scalar i() { return Scalar(GaussRational::i()); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const;
    /// Coefficient of the constant term (0 if absent).
    GaussRational constant_term() const { return coefficient({0, 0, 0}); }
    GaussRational coefficient(const Exponent& e) const;

    int max_exponent(Var v) const;
    int min_exponent(Var v) const;

    Scalar conj() const;
    Scalar pow(int exponent) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    /// Division by a unit (single nonzero monomial). Throws NonUnitDivisor otherwise.
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    /// Substitute t = t0, zeta = z0, zetabar = conj(z0).
    GaussRational eval(const Rational& t0, const GaussRational& z0) const;
    /// Partial substitution; the result is still a Scalar.
    Scalar substitute(const Rational& t0, const GaussRational& z0) const;
    Scalar substitute_t(const Rational& t0) const;

    /// Terms of maximal degree in `v`, divided by that power of the variable.
    Scalar leading_part(Var v) const;

    /// Canonical sorted-monomial text, parseable by the scalar grammar.
    std::string to_string() const;

private:
    void add_term(const Exponent& e, const GaussRational& c);

    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class ArithOp { Add, Sub, Mul };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);
Scalar scalar_div_unit(const Scalar& a, const Scalar& b);
GaussRational scalar_eval(const Scalar& a, const Rational& t0, const GaussRational& z0);

} // namespace k3fm
