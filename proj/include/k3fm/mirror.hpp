#pragma once

#include <array>
#include <optional>

#include "k3fm/cohomology.hpp"

namespace k3fm {

/// (period [sigma], complexified Kahler class [B + i omega]); either may be absent.
struct MirrorTriple {
    std::optional<CohClass> period;
    std::optional<CohClass> complexified_kahler;
};

/// Hyperbolic plane (f, c) with f^2 = 0, c^2 = -2, f.c = 1 when valid.
struct HyperbolicFrame {
    CohClass fclass;
    CohClass cclass;

    static HyperbolicFrame standard() { return {CohClass::F(), CohClass::C()}; }
    /// Roles of C and F exchanged; not a hyperbolic frame.
    static HyperbolicFrame swapped() { return {CohClass::C(), CohClass::F()}; }

    bool is_valid() const;
};

/// Canonical representative of x modulo f: the multiple of f that kills the
/// first coordinate in which f is nonzero is subtracted. That coefficient of f
/// must be a unit (NonUnitNormalizer otherwise).
CohClass reduce_mod(const CohClass& x, const CohClass& f);
bool congruent_mod(const CohClass& x, const CohClass& y, const CohClass& f);

/// f . Re(sigma) as a unit. Throws DegeneratePeriod if it vanishes and
/// NonUnitNormalizer if it is not a monomial.
Scalar mirror_normalizer(const CohClass& period, const HyperbolicFrame& frame);

/// Mirror classes before reduction, with N = f . Re(sigma):
///   B' = Re(sigma)/N - c,  omega' = Im(sigma)/N,
///   Re(sigma') = (c + B)/N,  Im(sigma') = omega/N.
struct MirrorClasses {
    CohClass b;
    CohClass omega;
    CohClass re_sigma;
    CohClass im_sigma;

    friend bool operator==(const MirrorClasses&, const MirrorClasses&) = default;
};
/// Throws MissingSlot if the triple lacks a period or a Kahler class.
MirrorClasses mirror_classes(const MirrorTriple& tr, const HyperbolicFrame& frame);

/// The mirror triple, each class reduced modulo f. The mirror Kahler class
/// sigma/N - c needs only the period; the mirror period needs both slots and
/// is left absent otherwise. Throws MissingSlot without a period.
MirrorTriple gross_mirror(const MirrorTriple& tr, const HyperbolicFrame& frame);

/// Residuals of Re^2 - Im^2, Im^2 - omega^2, omega.Re, omega.Im, Re.Im, B.f.
std::array<Scalar, 6> normalization_constraints(const MirrorClasses& c, const HyperbolicFrame& frame);

struct NormalizedClasses {
    MirrorClasses classes;
    /// Multiples of f added to (B, omega, Re sigma, Im sigma).
    std::array<Scalar, 4> multipliers;
};
/// Adds multiples of f so that all six constraints hold. The omega, Re and Im
/// multipliers solve a linear system (f^2 = 0); the B multiplier only moves B
/// within its class and is fixed by reducing B modulo f. Throws
/// UnderdeterminedNormalization if the system is singular,
/// InconsistentNormalization if it has no solution, NonUnitNormalizer if the
/// elimination needs a non-unit pivot.
NormalizedClasses normalize_mod_F(const MirrorClasses& c, const HyperbolicFrame& frame);

/// sigma_zeta = sigma/(2 zeta) + alpha(t) - zeta sigmabar/2.
CohClass normalized_twistor_period(const Scalar& t, const Scalar& zeta);
/// t sigma/(2 zeta) - zeta t sigmabar/2.
CohClass gualtieri_kahler_class(const Scalar& t, const Scalar& zeta);

struct MirrorIdentity {
    bool holds;
    /// Mirror Kahler class minus the expected class, reduced modulo f.
    CohClass residual;
    Scalar normalizer;
};
/// Mirror of (-, sigma_zeta) against B + i omega of the second family. Both
/// families live on the same lattice, so sigma_X and sigma_Y share a slot.
MirrorIdentity verify_theorem4(const Scalar& t, const Scalar& zeta,
                               const HyperbolicFrame& frame = HyperbolicFrame::standard());

} // namespace k3fm
