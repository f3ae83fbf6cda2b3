#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3fm/harmonic.hpp"

namespace k3fm {

/// u_t = -2 sigma^-1[alpha(t)]: qC = -2/t, qF = -2(t^2+1)/t.
HTClass direction_X(const Scalar& t);
/// v_t = (1/2)(-(1/t) sigma^-1 + t sigmabar).
HTClass direction_Y(const Scalar& t);

/// phi_T(u_t) - v_t. Expected to be -(1/2t) sigmabar.
HTClass bfield_correction(const Scalar& t);
/// phi_HT(u_t) - v_t. Expected to vanish.
HTClass untwisted_correction(const Scalar& t);

enum class SpinorFamily { XTwistor, YGualtieri };

/// Minus the inverse contraction of the zeta-linear part of a class.
/// Throws NotInImage if that part has a sigma or sigmabar component.
HTClass direction_from_class(const CohClass& family);
/// direction_from_class applied to twistor_period or gualtieri_spinor_class.
HTClass direction_from_spinor_family(SpinorFamily family, const Scalar& t);

struct FamilyReport {
    std::string tag;
    HTClass u;
    HTClass v;
    HTClass correction;
    std::vector<std::pair<std::string, bool>> verdicts;

    bool all_pass() const;
    friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

/// Kahler-class arithmetic of alpha(t) together with the direction classes.
FamilyReport kahler_checks(const Scalar& t);

/// Terms of the highest power of t occurring anywhere in x, with that power divided out.
HTClass leading_in_t(const HTClass& x);

/// u at t = 1: -2 sigma^-1[C] - 4 sigma^-1[F].
HTClass u_one();
/// Renormalized t -> infinity directions: u_inf = -2 sigma^-1[F], v_inf = sigmabar/2.
HTClass u_inf();
HTClass v_inf();

/// r-component of bfield_correction at t = 10^k for k = 1..k_max.
std::vector<GaussRational> correction_decay(int k_max);
/// Nonzero and strictly decreasing in absolute value.
bool is_strictly_shrinking(const std::vector<GaussRational>& values);

} // namespace k3fm
