#include "k3fm/spinor.hpp"

#include "k3fm/gcs.hpp"

namespace k3fm {

BasicSpinor<Scalar> lift(const Spinor& s) {
    BasicSpinor<Scalar> out;
    for (unsigned k = 0; k < Spinor::kSize; ++k) out[k] = Scalar(s[k]);
    return out;
}

Spinor substitute(const BasicSpinor<Scalar>& s, const Rational& t0, const GaussRational& z0) {
    Spinor out;
    for (unsigned k = 0; k < Spinor::kSize; ++k) out[k] = s[k].eval(t0, z0);
    return out;
}

Spinor normalized(const Spinor& s) {
    for (unsigned k = 0; k < Spinor::kSize; ++k) {
        if (!s[k].is_zero()) return s[k].inverse() * s;
    }
    throw ZeroSpinor("cannot normalize the zero spinor");
}

bool equal_up_to_scale(const Spinor& a, const Spinor& b) { return normalized(a) == normalized(b); }

Spinor sigma_spinor() { return Spinor::from_two_form(flat::sigma()); }

Spinor sigmabar_spinor() { return Spinor::from_two_form(flat::sigma_bar()); }

std::pair<Spinor, Spinor> bfield_symplectic_data(const GaussRational& zeta, const Rational& t) {
    if (zeta.is_zero()) throw PoleAtZero("B + i omega has a pole at zeta = 0");
    const GaussRational tt(t);
    const Spinor z = (tt / (2 * zeta)) * sigma_spinor() - (zeta * tt / 2) * sigmabar_spinor();
    const GaussRational half(Rational(1, 2));
    const GaussRational minus_half_i(0, Rational(-1, 2));
    return {half * (z + z.conj()), minus_half_i * (z - z.conj())};
}

namespace {

template <typename R>
BasicSpinor<R> family_formula(const R& zeta, const R& t, const BasicSpinor<R>& s, const BasicSpinor<R>& sb) {
    const auto one = BasicSpinor<R>::scalar(R(1));
    const BasicSpinor<R> middle = one - (R(Rational(1, 4)) * t * t) * wedge(s, sb);
    return t * s + (R(2) * zeta) * middle - (zeta * zeta * t) * sb;
}

} // namespace

Spinor family_spinor(const GaussRational& zeta, const Rational& t) {
    return family_formula<GaussRational>(zeta, GaussRational(t), sigma_spinor(), sigmabar_spinor());
}

Spinor family_spinor_infinity(const Rational& t) { return GaussRational(-t) * sigmabar_spinor(); }

BasicSpinor<Scalar> family_spinor_symbolic() {
    return family_formula<Scalar>(Scalar::zeta(), Scalar::t(), lift(sigma_spinor()), lift(sigmabar_spinor()));
}

Subspace clifford_annihilator(const Spinor& rho) {
    if (rho.is_zero()) throw ZeroSpinor("annihilator of the zero spinor");
    // Column j is the Clifford action of the j-th basis vector of T + T*.
    CMatrix action(Spinor::kSize, 8);
    for (unsigned j = 0; j < 8; ++j) {
        Spinor image;
        if (j < 4) {
            CVector x(4);
            x[j] = 1;
            image = interior(x, rho);
        } else {
            image = wedge(Spinor::basis(1u << (j - 4)), rho);
        }
        for (unsigned k = 0; k < Spinor::kSize; ++k) action(k, j) = image[k];
    }
    return kernel(action);
}

bool is_pure(const Spinor& rho) { return clifford_annihilator(rho).dim() == 4; }

bool is_isotropic(const Subspace& l) {
    const CMatrix b = l.basis();
    return (b * natural_pairing() * b.transpose()).is_zero();
}

} // namespace k3fm
