#pragma once

#include <ostream>
#include <string>

#include "k3fm/cohomology.hpp"

namespace k3fm {

/// Element p*sigma^-1 + qC*sigma^-1[C] + qF*sigma^-1[F] + r*sigmabar of HT^2.
///
/// p lives in H^0(L^2 T), (qC, qF) in H^1(T), r in H^2(O).
struct HTClass {
    Scalar p;
    Scalar qC;
    Scalar qF;
    Scalar r;

    static HTClass sigma_inv() { return {1, 0, 0, 0}; }
    static HTClass sigma_inv_C() { return {0, 1, 0, 0}; }
    static HTClass sigma_inv_F() { return {0, 0, 1, 0}; }
    static HTClass sigmabar() { return {0, 0, 0, 1}; }

    bool is_zero() const;
    HTClass substitute(const Rational& t0, const GaussRational& z0) const;

    HTClass& operator+=(const HTClass& o);
    HTClass& operator-=(const HTClass& o);
    friend HTClass operator+(HTClass x, const HTClass& y) { return x += y; }
    friend HTClass operator-(HTClass x, const HTClass& y) { return x -= y; }
    HTClass operator-() const;
    friend HTClass operator*(const Scalar& s, const HTClass& x);
    friend HTClass operator/(const HTClass& x, const Scalar& s);

    friend bool operator==(const HTClass& x, const HTClass& y) = default;

    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const HTClass& x);

inline constexpr MapSides kPhiSides{Side::X, Side::Y};
inline constexpr MapSides kPhiDualSides{Side::Y, Side::X};

/// Contraction with sigma, HT^2 -> HOmega_0:
/// sigma^-1 -> 4*1, sigmabar -> sigma sigmabar = 4 eta, sigma^-1[C] -> [C], sigma^-1[F] -> [F].
CohClass contract_sigma(const HTClass& x);

/// Inverse of contract_sigma on span{1, C, F, eta}. Throws NotInImage if x
/// has a sigma or sigmabar component.
HTClass contract_sigma_inv(const CohClass& x);

/// Cohomological Fourier-Mukai transform X -> Y:
///   1 -> -[C]-[F],  eta -> [F],  [C] -> 1+eta,  [F] -> -eta,
/// extended by sigma_X -> sigma_Y, sigmabar_X -> sigmabar_Y.
CohClass phi_homega(const CohClass& x);

/// Transform with the same kernel in the opposite direction, Y -> X. With the
/// symmetric kernel normalization it has the same matrix as phi_homega.
CohClass phi_homega_dual(const CohClass& x);

/// phi_HT, defined as contract_sigma_inv o phi_homega o contract_sigma.
HTClass phi_ht(const HTClass& x);

/// x + sign * (eta contracted into x). The only non-trivial contraction is
/// eta -| sigma^-1 = sigmabar (H^0(L^2T) -> H^2(O)); H^1(T) and H^2(O) are
/// annihilated for degree reasons.
HTClass todd_contract(const HTClass& x, int sign);

/// phi_T = (Td_Y^{1/2}) o phi_HT o (Td_X^{-1/2}).
HTClass phi_t(const HTClass& x);

} // namespace k3fm
