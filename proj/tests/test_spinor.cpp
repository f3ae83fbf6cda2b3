#include <doctest.h>

#include "k3fm/errors.hpp"
#include "k3fm/gcs.hpp"
#include "k3fm/properties.hpp"
#include "k3fm/spinor.hpp"

using namespace k3fm;

namespace {

const GaussRational kI = GaussRational::i();

// Clifford action of X + xi, with X and xi given as 4-vectors.
Spinor clifford(const CVector& x, const CVector& xi, const Spinor& rho) {
    Spinor one_form;
    for (unsigned k = 0; k < 4; ++k) one_form[1u << k] = xi[k];
    return interior(x, rho) + wedge(one_form, rho);
}

std::vector<GaussRational> samples() {
    return {GaussRational(Rational(1, 2)),  GaussRational(Rational(1, 3)), GaussRational(0, 1),
            GaussRational(Rational(3, 5), Rational(4, 5)), GaussRational(-1),    GaussRational(1),
            GaussRational(2),               GaussRational(0, Rational(-1, 2)), GaussRational(Rational(1, 2), Rational(1, 3)),
            GaussRational(Rational(1, 2), Rational(1, 2)), GaussRational(3),     GaussRational(-2, 1),
            GaussRational(Rational(4, 5), Rational(-3, 5)), GaussRational(0, Rational(1, 4)),
            GaussRational(Rational(-1, 3), 2), GaussRational(Rational(5, 4)), GaussRational(Rational(1, 3), Rational(-2, 3)),
            GaussRational(2, 2), GaussRational(Rational(-3, 2), Rational(-1, 2)), GaussRational(0, Rational(7, 5))};
}

} // namespace

TEST_CASE("wedge signs") {
    const Spinor dx1 = Spinor::basis(1), dy1 = Spinor::basis(2);
    CHECK(wedge(dx1, dy1) == Spinor::basis(3));
    CHECK(wedge(dy1, dx1) == -Spinor::basis(3));
    CHECK(wedge(dx1, dx1).is_zero());
    CHECK(wedge(Spinor::basis(0b0101), Spinor::basis(0b1010)) == -Spinor::basis(15));
}

TEST_CASE("interior product") {
    CHECK(interior(CVector{1, 0, 0, 0}, Spinor::basis(0b0011)) == Spinor::basis(0b0010));
    CHECK(interior(CVector{0, 1, 0, 0}, Spinor::basis(0b0011)) == -Spinor::basis(0b0001));
    CHECK(interior(CVector{1, 0, 0, 0}, Spinor::scalar(5)).is_zero());
}

TEST_CASE("Clifford relation (X+xi)^2 = xi(X)") {
    RandomSource rng(5);
    for (int k = 0; k < 50; ++k) {
        const CVector x = rng.vector(4), xi = rng.vector(4);
        const Spinor rho = rng.spinor();
        GaussRational xi_x;
        for (unsigned a = 0; a < 4; ++a) xi_x += xi[a] * x[a];
        CHECK(clifford(x, xi, clifford(x, xi, rho)) == xi_x * rho);
    }
}

TEST_CASE("exponential of a two-form") {
    CHECK(exp_two_form(Spinor{}) == Spinor::scalar(1));
    RandomSource rng(3);
    for (int k = 0; k < 20; ++k) {
        const Spinor b = Spinor::from_two_form(rng.two_form());
        CHECK(wedge(exp_two_form(b), exp_two_form(-b)) == Spinor::scalar(1));
    }
    CHECK_THROWS_AS(exp_two_form(Spinor::basis(1)), WrongDegree);
}

TEST_CASE("exponential identity for the B-field and symplectic form") {
    const Spinor s = sigma_spinor(), sb = sigmabar_spinor();
    for (const auto& z : samples()) {
        for (const Rational& t : {Rational(1), Rational(2), Rational(7, 3)}) {
            const auto [b, w] = bfield_symplectic_data(z, t);
            CHECK(b.is_homogeneous(2));
            CHECK(w.is_homogeneous(2));
            CHECK(b.conj() == b);
            CHECK(w.conj() == w);
            const GaussRational tt(t);
            const Spinor lhs = wedge(exp_two_form(b), exp_two_form(kI * w));
            const Spinor rhs = Spinor::scalar(1) + (tt / (2 * z)) * s - (z * tt / 2) * sb -
                               GaussRational(Rational(1, 4)) * tt * tt * wedge(s, sb);
            CHECK(lhs == rhs);
            CHECK((2 * z) * lhs == family_spinor(z, t));
        }
    }
}

TEST_CASE("B-field closed form at zeta = 1/2, t = 1") {
    const GaussRational z(Rational(1, 2));
    const Spinor re_zbar_sigma = GaussRational(Rational(1, 2)) * (z.conj() * sigma_spinor() + z * sigmabar_spinor());
    // (1 - 1/4) / (2/4) = 3/2.
    CHECK(bfield_symplectic_data(z, 1).first == GaussRational(Rational(3, 2)) * re_zbar_sigma);
    CHECK(bfield_symplectic_data(GaussRational(0, 1), 1).first.is_zero());
    CHECK_THROWS_AS(bfield_symplectic_data(0, 1), PoleAtZero);
}

TEST_CASE("family specializations") {
    CHECK(equal_up_to_scale(family_spinor(0, 2), sigma_spinor()));
    CHECK(equal_up_to_scale(family_spinor_infinity(2), sigmabar_spinor()));
    CHECK(substitute(family_spinor_symbolic(), 3, GaussRational(1, 2)) == family_spinor(GaussRational(1, 2), 3));
    CHECK_THROWS_AS(normalized(Spinor{}), ZeroSpinor);
}

TEST_CASE("annihilator of sigma") {
    std::vector<CVector> expected;
    for (int k = 0; k < 2; ++k) {
        CVector x(8), xi(8);
        for (std::size_t a = 0; a < 4; ++a) {
            x[a] = flat::d_zbar(k)[a];
            xi[4 + a] = flat::dz(k)[a];
        }
        expected.push_back(x);
        expected.push_back(xi);
    }
    CHECK(clifford_annihilator(sigma_spinor()) == Subspace::span(expected, 8));
    CHECK(is_pure(sigma_spinor()));
}

TEST_CASE("annihilator of exp(i omega_J)") {
    const Spinor rho = exp_two_form(kI * Spinor::from_two_form(flat::omega_J()));
    const Subspace ann = clifford_annihilator(rho);
    CHECK(ann == eigenspace_i(j_symplectic(flat::omega_J()).matrix()));
    // Each basis vector really kills rho.
    for (const auto& v : ann.vectors()) {
        const CVector x(v.begin(), v.begin() + 4), xi(v.begin() + 4, v.end());
        CHECK(clifford(x, xi, rho).is_zero());
    }
}

TEST_CASE("non-pure spinors") {
    const Spinor rho = Spinor::scalar(1) + Spinor::basis(15);
    CHECK(clifford_annihilator(rho).dim() < 4);
    CHECK_FALSE(is_pure(rho));
    CHECK_THROWS_AS(clifford_annihilator(Spinor{}), ZeroSpinor);
}

TEST_CASE("family spinors are pure and match J_zeta") {
    for (const auto& z : samples()) {
        for (const Rational& t : {Rational(3, 2), Rational(5)}) {
            CAPTURE(z);
            const Spinor rho = family_spinor(z, t);
            const Subspace ann = clifford_annihilator(rho);
            CHECK(ann.dim() == 4);
            CHECK(is_isotropic(ann));
            CHECK(ann == eigenspace_i(j_zeta(z, t).matrix()));
            CHECK(clifford_annihilator(GaussRational(Rational(-2, 7), 3) * rho) == ann);
        }
    }
}

TEST_CASE("spinor route agrees with the spherical route") {
    for (const auto& z : samples()) {
        const auto [b, w] = bfield_symplectic_data(z, 2);
        const TwistedSymplectic sph = spherical_bfield_data(z, 2);
        CHECK(b == Spinor::from_two_form(sph.b));
        CHECK(w == Spinor::from_two_form(sph.omega));
    }
}
