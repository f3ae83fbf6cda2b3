#pragma once

#include <ostream>
#include <string>

#include "k3fm/scalar.hpp"

namespace k3fm {

/// Which surface a class lives on. X is the elliptic K3, Y its Jacobian.
/// Both share one coordinate representation; maps record the direction.
enum class Side { X, Y };

struct MapSides {
    Side from;
    Side to;
};

/// Even cohomology class a*1 + cC*[C] + cF*[F] + cs*sigma + csb*sigmabar + b*eta.
///
/// Only span{1, C, F, sigma, sigmabar, eta} is modelled: every class appearing
/// in the construction lives there. [C] and [F] are real, conj swaps the
/// sigma and sigmabar slots.
struct CohClass {
    Scalar a;
    Scalar cC;
    Scalar cF;
    Scalar cs;
    Scalar csb;
    Scalar b;

    static CohClass one() { return {1, 0, 0, 0, 0, 0}; }
    static CohClass C() { return {0, 1, 0, 0, 0, 0}; }
    static CohClass F() { return {0, 0, 1, 0, 0, 0}; }
    static CohClass sigma() { return {0, 0, 0, 1, 0, 0}; }
    static CohClass sigmabar() { return {0, 0, 0, 0, 1, 0}; }
    static CohClass eta() { return {0, 0, 0, 0, 0, 1}; }

    bool is_zero() const;
    /// No H^0 or H^4 part.
    bool is_h2() const { return a.is_zero() && b.is_zero(); }

    CohClass conj() const;
    /// Substitute numeric values into every coefficient.
    CohClass substitute(const Rational& t0, const GaussRational& z0) const;

    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    friend CohClass operator+(CohClass x, const CohClass& y) { return x += y; }
    friend CohClass operator-(CohClass x, const CohClass& y) { return x -= y; }
    CohClass operator-() const;
    friend CohClass operator*(const Scalar& s, const CohClass& x);
    friend CohClass operator*(const CohClass& x, const Scalar& s) { return s * x; }
    /// Divide every coefficient by a unit scalar.
    friend CohClass operator/(const CohClass& x, const Scalar& s);

    friend bool operator==(const CohClass& x, const CohClass& y) = default;

    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const CohClass& x);

/// Intersection form on the H^2 parts: Q(C,C) = -2, Q(C,F) = 1, Q(F,F) = 0,
/// Q(sigma, sigmabar) = 4, everything else 0.
Scalar intersection(const CohClass& x, const CohClass& y);

/// Cup product. H^0 acts as scalars, H^2 x H^2 lands in eta through Q.
CohClass wedge(const CohClass& x, const CohClass& y);

/// <(a,v,b),(a',v',b')> = Q(v,v') - a b' - a' b.
Scalar mukai_pairing(const CohClass& x, const CohClass& y);

/// (x + conj x)/2 and (x - conj x)/(2i).
CohClass real_part(const CohClass& x);
CohClass imag_part(const CohClass& x);

/// Td^{1/2} = 1 + eta for sign = +1, Td^{-1/2} = 1 - eta for sign = -1.
CohClass todd_half(int sign);

/// (1/t)[C] + ((t^2+1)/t)[F].
CohClass alpha_class(const Scalar& t);

/// sigma + 2 zeta alpha(t) - zeta^2 sigmabar, the period of the twistor family of X.
CohClass twistor_period(const Scalar& t, const Scalar& zeta);

/// sigma + 2 zeta ((1/t) 1 - t eta) - zeta^2 sigmabar, the class of the rescaled
/// pure spinor of the second family (uses sigma sigmabar = 4 eta).
CohClass gualtieri_spinor_class(const Scalar& t, const Scalar& zeta);

/// Coefficient of zeta^k in every slot of x (x read as a polynomial in zeta).
CohClass zeta_coefficient(const CohClass& x, int k);

} // namespace k3fm
