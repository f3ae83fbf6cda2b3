#include <doctest.h>

#include <array>

#include "k3fm/errors.hpp"
#include "k3fm/harmonic.hpp"

using namespace k3fm;

namespace {

// Independent oracle: the transforms as rational matrices, composed by hand.
// Cohomology coordinates (1, C, F, sigma, sigmabar, eta); HT coordinates
// (sigma^-1, sigma^-1 C, sigma^-1 F, sigmabar).
using Mat = std::vector<std::vector<Rational>>;
using Vec = std::vector<Rational>;

Vec mat_apply(const Mat& m, const Vec& v) {
    Vec out(m.size(), Rational(0));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
}

// Columns are images of basis vectors; stored row-major below.
const Mat kPhiOmega{
    // 1  C  F  s  sb eta
    {0, 1, 0, 0, 0, 0},  // 1
    {-1, 0, 0, 0, 0, 0}, // C
    {-1, 0, 0, 0, 0, 1}, // F
    {0, 0, 0, 1, 0, 0},  // sigma
    {0, 0, 0, 0, 1, 0},  // sigmabar
    {0, 1, -1, 0, 0, 0}, // eta
};
// contraction with sigma: HT -> Coh.
const Mat kContract{
    {4, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 4},
};
// Its inverse on the image: Coh -> HT.
const Mat kContractInv{
    {Rational(1, 4), 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, Rational(1, 4)},
};
// x -> x + sign * eta -| x on HT: sigma^-1 picks up sign * sigmabar.
Mat todd(int sign) { return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {sign, 0, 0, 1}}; }

Vec oracle_phi_ht(const Vec& v) { return mat_apply(kContractInv, mat_apply(kPhiOmega, mat_apply(kContract, v))); }
Vec oracle_phi_t(const Vec& v) { return mat_apply(todd(+1), oracle_phi_ht(mat_apply(todd(-1), v))); }

HTClass from_vec(const Vec& v) { return {Scalar(v[0]), Scalar(v[1]), Scalar(v[2]), Scalar(v[3])}; }

const std::array<Vec, 4> kHTBasis{Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}, Vec{0, 0, 1, 0}, Vec{0, 0, 0, 1}};

const HTClass si = HTClass::sigma_inv(), siC = HTClass::sigma_inv_C(), siF = HTClass::sigma_inv_F(),
              sb = HTClass::sigmabar();
const Scalar q = Scalar(Rational(1, 4));

} // namespace

TEST_CASE("contraction table") {
    CHECK(contract_sigma(si) == Scalar(4) * CohClass::one());
    CHECK(contract_sigma(sb) == Scalar(4) * CohClass::eta());
    CHECK(contract_sigma(siC) == CohClass::C());
    CHECK(contract_sigma(siF) == CohClass::F());
    CHECK(contract_sigma(HTClass{}).is_zero());
}

TEST_CASE("inverse contraction") {
    CHECK(contract_sigma_inv(Scalar(4) * CohClass::one()) == si);
    CHECK(contract_sigma_inv(CohClass::C()) == siC);
    CHECK_THROWS_AS(contract_sigma_inv(CohClass::sigma()), NotInImage);
    for (const auto& v : kHTBasis) CHECK(contract_sigma_inv(contract_sigma(from_vec(v))) == from_vec(v));
}

TEST_CASE("cohomological transform table") {
    CHECK(phi_homega(CohClass::one()) == -CohClass::C() - CohClass::F());
    CHECK(phi_homega(CohClass::F()) == -CohClass::eta());
    CHECK(phi_homega(CohClass::eta()) == CohClass::F());
    CHECK(phi_homega(CohClass::C()) == CohClass::one() + CohClass::eta());
    CHECK(phi_homega(CohClass::C() + CohClass::eta()) == CohClass::one() + CohClass::eta() + CohClass::F());
}

TEST_CASE("reverse transform composes to minus the identity") {
    for (const auto& x : {CohClass::one(), CohClass::C(), CohClass::F(), CohClass::eta()}) {
        CHECK(phi_homega_dual(phi_homega(x)) == -x);
    }
}

TEST_CASE("phi_HT table") {
    CHECK(phi_ht(q * si) == -siC - siF);
    CHECK(phi_ht(q * sb) == siF);
    CHECK(phi_ht(siC) == q * si + q * sb);
    CHECK(phi_ht(siF) == -(q * sb));
}

TEST_CASE("phi_HT equals the composed matrix oracle") {
    for (const auto& v : kHTBasis) CHECK(phi_ht(from_vec(v)) == from_vec(oracle_phi_ht(v)));
}

TEST_CASE("todd twist on HT") {
    CHECK(todd_contract(si, -1) == si - sb);
    CHECK(todd_contract(sb, +1) == sb);
    CHECK(todd_contract(siC, +1) == siC);
    CHECK(todd_contract(siC, -1) == siC);
    CHECK(todd_contract(siF, -1) == siF);
    for (const auto& v : kHTBasis) {
        const HTClass x = from_vec(v);
        CHECK(todd_contract(todd_contract(x, +1), -1) == x);
        CHECK(contract_sigma(todd_contract(x, +1)) == wedge(todd_half(+1), contract_sigma(x)));
    }
}

TEST_CASE("phi_T table") {
    CHECK(phi_t(q * si) == -siC - Scalar(2) * siF);
    CHECK(phi_t(q * sb) == siF);
    CHECK(phi_t(siC) == q * si + Scalar(Rational(2, 4)) * sb);
    CHECK(phi_t(siF) == -(q * sb));
}

TEST_CASE("phi_T equals the composed matrix oracle") {
    for (const auto& v : kHTBasis) CHECK(phi_t(from_vec(v)) == from_vec(oracle_phi_t(v)));
}

TEST_CASE("transforms are linear over the scalar ring") {
    const Scalar a = Scalar::t() + Scalar::zeta(), b = Scalar::i() * Scalar::t().pow(-1);
    const HTClass x = a * si + b * siF, y = b * siC - a * sb;
    CHECK(phi_t(x + y) == phi_t(x) + phi_t(y));
    CHECK(phi_ht(a * y) == a * phi_ht(y));
}
