#include <doctest.h>

#include "k3fm/errors.hpp"
#include "k3fm/gcs.hpp"
#include "k3fm/linalg.hpp"

using namespace k3fm;

TEST_CASE("kernel of trivial matrices") {
    CHECK(kernel(CMatrix::identity(4)).dim() == 0);
    const Subspace all = kernel(CMatrix::zero(4, 4));
    CHECK(all.dim() == 4);
    const std::vector<CVector> e{CVector{1, 0, 0, 0}, CVector{0, 1, 0, 0}, CVector{0, 0, 1, 0}, CVector{0, 0, 0, 1}};
    CHECK(all == Subspace::span(e, 4));
}

TEST_CASE("kernel of the twistor form is two dimensional") {
    const Subspace k = kernel(flat::form_map(twistor_form(GaussRational(Rational(1, 2)))));
    CHECK(k.dim() == 2);
    for (const auto& v : k.vectors()) {
        const CVector image = flat::form_map(twistor_form(GaussRational(Rational(1, 2)))) * v;
        for (const auto& x : image) CHECK(x.is_zero());
    }
}

TEST_CASE("rref is canonical") {
    const CVector a{1, 2, GaussRational::i()}, b{0, 1, 1};
    const CVector c{1, 3, GaussRational(1, 1)};
    const std::vector<CVector> v1{a, b}, v2{c, a}, v3{a, c, b};
    CHECK(Subspace::span(v1, 3) == Subspace::span(v2, 3));
    CHECK(Subspace::span(v3, 3).dim() == 2);
    CHECK(Subspace::span(v1, 3).contains(c));
    CHECK_FALSE(Subspace::span(v1, 3).contains(CVector{0, 0, 1}));
}

TEST_CASE("inverse") {
    const CMatrix m{{1, 2}, {3, GaussRational::i()}};
    CHECK(m * inverse(m) == CMatrix::identity(2));
    CHECK(inverse(m) * m == CMatrix::identity(2));
    CHECK_THROWS_AS(inverse(CMatrix{{1, 2}, {2, 4}}), SingularMatrix);
    CHECK(rank(CMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("eigenspace of the complex structure") {
    const GCStructure j = j_complex();
    const Subspace l = eigenspace_i(j.matrix());
    CHECK(l.dim() == 4);
    // T^{0,1} + Omega^{1,0}.
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
    CHECK(l == Subspace::span(expected, 8));
    CHECK(eigenspace_i((-j).matrix()) == l.conj());
}

TEST_CASE("eigenspace of J_zeta is half dimensional") {
    CHECK(eigenspace_i(j_zeta(GaussRational(Rational(1, 3)), 2).matrix()).dim() == 4);
}

TEST_CASE("graphs") {
    const CMatrix a{{1, GaussRational::i()}, {0, 2}};
    CHECK(graph_extract(graph_of(a), 2) == a);
    const std::vector<CVector> base{CVector{1, 0, 0, 0}, CVector{0, 1, 0, 0}};
    CHECK(graph_extract(Subspace::span(base, 4), 2).is_zero());
    const std::vector<CVector> vertical{CVector{1, 0, 0, 0}, CVector{0, 0, 1, 0}};
    CHECK_THROWS_AS(graph_extract(Subspace::span(vertical, 4), 2), NotAGraph);
}

TEST_CASE("subspace operations") {
    const std::vector<CVector> v{CVector{1, GaussRational::i(), 0}};
    const Subspace s = Subspace::span(v, 3);
    CHECK(s.conj().contains(CVector{1, -GaussRational::i(), 0}));
    CHECK(s.sum(s.conj()).dim() == 2);
    const CMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    CHECK(s.transformed(swap).contains(CVector{GaussRational::i(), 1, 0}));
}
