#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "k3fm/gcs.hpp"
#include "k3fm/spinor.hpp"

namespace k3fm {

/// Small random exact values for property checks.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Rational rational();
    GaussRational gauss();
    GaussRational nonzero_gauss();
    /// Up to four terms with exponents in [-2, 2].
    Scalar scalar();
    Spinor spinor();
    CVector vector(std::size_t n);
    /// Random real antisymmetric 4x4 component matrix.
    CMatrix two_form();
    /// Matrix that is invertible by construction (product of elementary matrices).
    CMatrix invertible(std::size_t n);

private:
    std::mt19937_64 rng_;
};

struct PropertyResult {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

/// Commutativity, associativity, distributivity and identities of (+, *).
PropertyResult check_scalar_ring(std::uint64_t seed, int cases);
/// conj(conj x) = x, conj(x + y) and conj(x y) split.
PropertyResult check_conj_involution(std::uint64_t seed, int cases);
/// (a ^ b) ^ c = a ^ (b ^ c) and a ^ b = (-1)^{pq} b ^ a on homogeneous parts.
PropertyResult check_wedge_associativity(std::uint64_t seed, int cases);
/// span(basis(L)) = L, invertible coordinate changes round trip, graph_of and
/// graph_extract are inverse.
PropertyResult check_subspace_round_trip(std::uint64_t seed, int cases);
/// b_transform(J, B1 + B2) = b_transform(b_transform(J, B2), B1).
PropertyResult check_btransform_action(std::uint64_t seed, int cases);

} // namespace k3fm
