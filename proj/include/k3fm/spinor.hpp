#pragma once

#include <array>
#include <bit>
#include <ostream>
#include <string>
#include <utility>

#include "k3fm/errors.hpp"
#include "k3fm/linalg.hpp"

namespace k3fm {

/// Element of the complexified exterior algebra on (dx1, dy1, dx2, dy2).
///
/// Coefficient k belongs to the basis monomial whose factors are the bits of k
/// in increasing order, e.g. 0b0101 = dx1^dx2. R is GaussRational for sampled
/// spinors and Scalar for spinors depending on (t, zeta).
template <typename R>
class BasicSpinor {
public:
    static constexpr unsigned kSize = 16;
    using Coeffs = std::array<R, kSize>;

    BasicSpinor() { coeffs_.fill(R(0)); }
    explicit BasicSpinor(Coeffs c) : coeffs_(std::move(c)) {}

    static BasicSpinor scalar(const R& c) {
        BasicSpinor s;
        s.coeffs_[0] = c;
        return s;
    }
    static BasicSpinor basis(unsigned mask, const R& c = R(1)) {
        BasicSpinor s;
        s.coeffs_.at(mask) = c;
        return s;
    }
    /// sum_{a<b} w(a,b) e^a ^ e^b for a component matrix w.
    static BasicSpinor from_two_form(const CMatrix& w) {
        if (w.rows() != 4 || w.cols() != 4) throw DimensionMismatch("two-form must be 4x4");
        BasicSpinor s;
        for (unsigned a = 0; a < 4; ++a)
            for (unsigned b = a + 1; b < 4; ++b) s.coeffs_[(1u << a) | (1u << b)] = R(w(a, b));
        return s;
    }

    const R& operator[](unsigned mask) const { return coeffs_.at(mask); }
    R& operator[](unsigned mask) { return coeffs_.at(mask); }
    const Coeffs& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }
    /// True if every nonzero coefficient has degree d.
    bool is_homogeneous(int d) const {
        for (unsigned k = 0; k < kSize; ++k)
            if (!coeffs_[k].is_zero() && std::popcount(k) != d) return false;
        return true;
    }
    /// Degree-d part.
    BasicSpinor part(int d) const {
        BasicSpinor s;
        for (unsigned k = 0; k < kSize; ++k)
            if (std::popcount(k) == d) s.coeffs_[k] = coeffs_[k];
        return s;
    }
    /// Coefficientwise conjugation; the basis one-forms are real.
    BasicSpinor conj() const {
        BasicSpinor s;
        for (unsigned k = 0; k < kSize; ++k) s.coeffs_[k] = coeffs_[k].conj();
        return s;
    }

    BasicSpinor& operator+=(const BasicSpinor& o) {
        for (unsigned k = 0; k < kSize; ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    BasicSpinor& operator-=(const BasicSpinor& o) {
        for (unsigned k = 0; k < kSize; ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    friend BasicSpinor operator+(BasicSpinor a, const BasicSpinor& b) { return a += b; }
    friend BasicSpinor operator-(BasicSpinor a, const BasicSpinor& b) { return a -= b; }
    BasicSpinor operator-() const { return BasicSpinor() - *this; }
    friend BasicSpinor operator*(const R& c, const BasicSpinor& s) {
        BasicSpinor out;
        for (unsigned k = 0; k < kSize; ++k) out.coeffs_[k] = c * s.coeffs_[k];
        return out;
    }

    friend bool operator==(const BasicSpinor& a, const BasicSpinor& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const {
        static constexpr const char* kNames[4] = {"dx1", "dy1", "dx2", "dy2"};
        std::string out;
        for (unsigned k = 0; k < kSize; ++k) {
            if (coeffs_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + coeffs_[k].to_string() + ")";
            for (unsigned a = 0; a < 4; ++a)
                if (k & (1u << a)) out += std::string("*") + kNames[a];
        }
        return out.empty() ? "0" : out;
    }

private:
    Coeffs coeffs_;
};

template <typename R>
std::ostream& operator<<(std::ostream& os, const BasicSpinor<R>& s) {
    return os << s.to_string();
}

using Spinor = BasicSpinor<GaussRational>;

/// Sign of e_a ^ e_b relative to e_{a|b}: (-1)^{#{(i in a, j in b) : i > j}}.
inline int wedge_sign(unsigned a, unsigned b) {
    int swaps = 0;
    for (unsigned j = 0; j < 4; ++j)
        if (b & (1u << j)) swaps += std::popcount(a >> (j + 1));
    return (swaps % 2) ? -1 : 1;
}

template <typename R>
BasicSpinor<R> wedge(const BasicSpinor<R>& x, const BasicSpinor<R>& y) {
    BasicSpinor<R> out;
    for (unsigned a = 0; a < BasicSpinor<R>::kSize; ++a) {
        if (x[a].is_zero()) continue;
        for (unsigned b = 0; b < BasicSpinor<R>::kSize; ++b) {
            if ((a & b) || y[b].is_zero()) continue;
            R term = x[a] * y[b];
            if (wedge_sign(a, b) < 0) term = -term;
            out[a | b] += term;
        }
    }
    return out;
}

/// Interior product with a tangent vector X = sum X^k d/de_k, as the
/// antiderivation with iota_X(e^k) = X^k.
template <typename R>
BasicSpinor<R> interior(const CVector& x, const BasicSpinor<R>& rho) {
    if (x.size() != 4) throw DimensionMismatch("tangent vector must have 4 components");
    BasicSpinor<R> out;
    for (unsigned m = 0; m < BasicSpinor<R>::kSize; ++m) {
        if (rho[m].is_zero()) continue;
        for (unsigned k = 0; k < 4; ++k) {
            if (!(m & (1u << k)) || x[k].is_zero()) continue;
            // Move e^k to the front past the lower factors.
            const bool odd = std::popcount(m & ((1u << k) - 1)) % 2;
            R term = R(x[k]) * rho[m];
            if (odd) term = -term;
            out[m & ~(1u << k)] += term;
        }
    }
    return out;
}

/// 1 + B + B^B/2. Throws WrongDegree unless B is homogeneous of degree 2.
template <typename R>
BasicSpinor<R> exp_two_form(const BasicSpinor<R>& b) {
    if (!b.is_homogeneous(2)) throw WrongDegree("exponential is only defined for two-forms");
    return BasicSpinor<R>::scalar(R(1)) + b + R(Rational(1, 2)) * wedge(b, b);
}

/// Convert a sampled spinor to Scalar coefficients.
BasicSpinor<Scalar> lift(const Spinor& s);
/// Substitute (t, zeta) into every coefficient.
Spinor substitute(const BasicSpinor<Scalar>& s, const Rational& t0, const GaussRational& z0);

/// Divide by the first nonzero coefficient. Throws ZeroSpinor on 0.
Spinor normalized(const Spinor& s);
bool equal_up_to_scale(const Spinor& a, const Spinor& b);

/// sigma = dz1^dz2 and sigmabar as spinors.
Spinor sigma_spinor();
Spinor sigmabar_spinor();

/// Real B and omega with B + i omega = t sigma/(2 zeta) - zeta t sigmabar/2.
/// Throws PoleAtZero for zeta = 0.
std::pair<Spinor, Spinor> bfield_symplectic_data(const GaussRational& zeta, const Rational& t);

/// t sigma + 2 zeta (1 - t^2 sigma sigmabar/4) - zeta^2 t sigmabar.
Spinor family_spinor(const GaussRational& zeta, const Rational& t);
/// Leading coefficient in zeta, the spinor in the chart at zeta = infinity: -t sigmabar.
Spinor family_spinor_infinity(const Rational& t);
/// family_spinor with t and zeta kept as symbols.
BasicSpinor<Scalar> family_spinor_symbolic();

/// {X + xi : iota_X rho + xi ^ rho = 0} in coordinates (X; xi). Throws ZeroSpinor.
Subspace clifford_annihilator(const Spinor& rho);
/// Annihilator of dimension 4. Throws ZeroSpinor.
bool is_pure(const Spinor& rho);
/// Every pair of basis vectors pairs to zero under natural_pairing().
bool is_isotropic(const Subspace& l);

} // namespace k3fm
