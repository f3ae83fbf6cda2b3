#include "k3fm/gcs.hpp"

#include "k3fm/errors.hpp"

namespace k3fm {

namespace flat {

namespace {

CVector unit(std::size_t k, std::size_t n = 4) {
    CVector v(n);
    v[k] = 1;
    return v;
}

} // namespace

CMatrix complex_structure() {
    CMatrix m(4, 4);
    for (std::size_t k = 0; k < 2; ++k) {
        m(2 * k + 1, 2 * k) = 1;
        m(2 * k, 2 * k + 1) = -1;
    }
    return m;
}

CMatrix wedge_one_forms(const CVector& u, const CVector& v) {
    if (u.size() != 4 || v.size() != 4) throw DimensionMismatch("one-forms must have 4 components");
    CMatrix w(4, 4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) w(a, b) = u[a] * v[b] - u[b] * v[a];
    return w;
}

CMatrix omega_I() { return wedge_one_forms(unit(0), unit(1)) + wedge_one_forms(unit(2), unit(3)); }

CMatrix sigma() { return wedge_one_forms(dz(0), dz(1)); }

CMatrix sigma_bar() { return sigma().conj(); }

CMatrix real_form(const CMatrix& w) { return GaussRational(Rational(1, 2)) * (w + w.conj()); }

CMatrix imag_form(const CMatrix& w) { return GaussRational(0, Rational(-1, 2)) * (w - w.conj()); }

CMatrix omega_J() { return real_form(sigma()); }

CMatrix omega_K() { return imag_form(sigma()); }

CMatrix form_map(const CMatrix& w) { return w.transpose(); }

GaussRational form_value(const CMatrix& w, const CVector& x, const CVector& y) {
    GaussRational s;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            if (!x[a].is_zero() && !y[b].is_zero()) s += x[a] * w(a, b) * y[b];
    return s;
}

CVector d_z(int k) {
    CVector v(4);
    v[2 * k] = Rational(1, 2);
    v[2 * k + 1] = GaussRational(0, Rational(-1, 2));
    return v;
}

CVector d_zbar(int k) {
    CVector v(4);
    v[2 * k] = Rational(1, 2);
    v[2 * k + 1] = GaussRational(0, Rational(1, 2));
    return v;
}

CVector dz(int k) {
    CVector v(4);
    v[2 * k] = 1;
    v[2 * k + 1] = GaussRational::i();
    return v;
}

CVector dzbar(int k) {
    CVector v(4);
    v[2 * k] = 1;
    v[2 * k + 1] = -GaussRational::i();
    return v;
}

CMatrix tangent_frame() {
    const std::vector<CVector> cols{d_zbar(0), d_zbar(1), d_z(0), d_z(1)};
    return CMatrix::from_columns(cols, 4);
}

CMatrix generalized_frame() {
    auto vector_part = [](const CVector& x) {
        CVector v(8);
        for (std::size_t k = 0; k < 4; ++k) v[k] = x[k];
        return v;
    };
    auto form_part = [](const CVector& xi) {
        CVector v(8);
        for (std::size_t k = 0; k < 4; ++k) v[4 + k] = xi[k];
        return v;
    };
    const std::vector<CVector> cols{
        vector_part(d_zbar(0)), vector_part(d_zbar(1)), form_part(dz(0)),     form_part(dz(1)),
        form_part(dzbar(0)),    form_part(dzbar(1)),    vector_part(d_z(0)), vector_part(d_z(1)),
    };
    return CMatrix::from_columns(cols, 8);
}

namespace {

// Column k holds the coefficients of iota_{from_k} w in the dual basis of `to`:
// the coefficient of the form dual to to_j is w(from_k, to_j).
CMatrix restrict_map(const CMatrix& w, CVector (*from)(int), CVector (*to)(int)) {
    CMatrix m(2, 2);
    for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j) m(j, k) = form_value(w, from(k), to(j));
    return m;
}

} // namespace

CMatrix restrict_01_to_01(const CMatrix& w) { return restrict_map(w, d_zbar, d_zbar); }

CMatrix restrict_10_to_10(const CMatrix& w) { return restrict_map(w, d_z, d_z); }

CMatrix restrict_01_to_10(const CMatrix& w) { return restrict_map(w, d_zbar, d_z); }

CMatrix sigma_inverse_bivector() { return GaussRational(4) * inverse(restrict_10_to_10(sigma())); }

GaussRational bivector_contraction(const CMatrix& w) {
    // <d/dz1 ^ d/dz2, w> = w(d/dz1, d/dz2) under the determinant pairing.
    return GaussRational(4) * form_value(w, d_z(0), d_z(1));
}

} // namespace flat

GCStructure::GCStructure(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 8 || m_.cols() != 8) throw DimensionMismatch("generalized complex structure must be 8x8");
}

bool GCStructure::squares_to_minus_identity() const { return m_ * m_ == -CMatrix::identity(8); }

bool GCStructure::is_orthogonal() const {
    const CMatrix g = natural_pairing();
    return m_.transpose() * g * m_ == g;
}

CMatrix natural_pairing() {
    CMatrix g(8, 8);
    for (std::size_t k = 0; k < 4; ++k) {
        g(k, 4 + k) = Rational(1, 2);
        g(4 + k, k) = Rational(1, 2);
    }
    return g;
}

GCStructure j_complex() {
    const CMatrix i = flat::complex_structure();
    CMatrix m(8, 8);
    m.set_block(0, 0, -i);
    m.set_block(4, 4, i.transpose());
    return GCStructure(std::move(m));
}

GCStructure j_symplectic(const CMatrix& omega) {
    const CMatrix w = flat::form_map(omega);
    CMatrix w_inv;
    try {
        w_inv = inverse(w);
    } catch (const SingularMatrix&) {
        throw DegenerateForm("two-form is degenerate");
    }
    CMatrix m(8, 8);
    m.set_block(0, 4, -w_inv);
    m.set_block(4, 0, w);
    return GCStructure(std::move(m));
}

GCStructure b_transform(const GCStructure& j, const CMatrix& b) {
    const CMatrix bm = flat::form_map(b);
    CMatrix plus = CMatrix::identity(8);
    CMatrix minus = CMatrix::identity(8);
    plus.set_block(4, 0, bm);
    minus.set_block(4, 0, -bm);
    return GCStructure(minus * j.matrix() * plus);
}

SphericalPoint spherical_point(const GaussRational& zeta) {
    const Rational n = zeta.norm();
    const Rational d = 1 + n;
    SphericalPoint p;
    p.cos_theta = (1 - n) / d;
    p.sin_theta_cos_phi = -2 * zeta.im() / d;
    p.sin_theta_sin_phi = 2 * zeta.re() / d;
    p.sin2_theta = 4 * n / (d * d);
    for (Rational* q : {&p.cos_theta, &p.sin_theta_cos_phi, &p.sin_theta_sin_phi, &p.sin2_theta}) q->canonicalize();
    return p;
}

namespace {

CMatrix scaled(const Rational& s, const CMatrix& m) { return GaussRational(s) * m; }

} // namespace

GCStructure j_theta(const Rational& cos_theta, const Rational& sin_theta, const Rational& t) {
    const CMatrix wj = scaled(t, flat::omega_J());
    return GCStructure(scaled(cos_theta, j_complex().matrix()) + scaled(sin_theta, j_symplectic(wj).matrix()));
}

GCStructure j_zeta(const GaussRational& zeta, const Rational& t) {
    const SphericalPoint p = spherical_point(zeta);
    const CMatrix wj = scaled(t, flat::omega_J());
    const CMatrix wk = scaled(t, flat::omega_K());
    return GCStructure(scaled(p.cos_theta, j_complex().matrix()) +
                       scaled(p.sin_theta_cos_phi, j_symplectic(wj).matrix()) +
                       scaled(p.sin_theta_sin_phi, j_symplectic(wk).matrix()));
}

GCStructure j_zeta_infinity() { return -j_complex(); }

TwistedSymplectic spherical_bfield_data(const GaussRational& zeta, const Rational& t) {
    if (zeta.is_zero()) throw PoleAtZero("B-field and symplectic form have a pole at zeta = 0");
    const SphericalPoint p = spherical_point(zeta);
    const CMatrix wj = scaled(t, flat::omega_J());
    const CMatrix wk = scaled(t, flat::omega_K());
    const Rational inv_s2 = 1 / p.sin2_theta;
    const Rational cot_over_s = p.cos_theta / p.sin2_theta;
    return {
        scaled(cot_over_s * p.sin_theta_sin_phi, wj) - scaled(cot_over_s * p.sin_theta_cos_phi, wk),
        scaled(inv_s2 * p.sin_theta_cos_phi, wj) + scaled(inv_s2 * p.sin_theta_sin_phi, wk),
    };
}

CMatrix deformation_graph_Y(const GaussRational& zeta, const Rational& t) {
    const Subspace l = eigenspace_i(j_zeta(zeta, t).matrix());
    return graph_extract(l.transformed(inverse(flat::generalized_frame())), 4);
}

CMatrix deformation_graph_Y_closed_form(const GaussRational& zeta, const Rational& t) {
    CMatrix a(4, 4);
    a.set_block(0, 0, (zeta * t / 2) * flat::restrict_01_to_01(flat::sigma_bar()));
    a.set_block(2, 2, (-zeta / GaussRational(Rational(2 * t))) * flat::sigma_inverse_bivector());
    return a;
}

std::array<CVector, 4> eigen_equation_residuals(const GaussRational& zeta, const Rational& t, const CVector& v) {
    if (v.size() != 8) throw DimensionMismatch("generalized vector must have 8 components");
    const GaussRational i = GaussRational::i();
    const CMatrix cs = flat::complex_structure();
    const CMatrix id = CMatrix::identity(4);
    const GaussRational half(Rational(1, 2));
    // Type projections: (1,0) is the +i eigenspace of I on T and of I^* on T*.
    const CMatrix p10 = half * (id - i * cs);
    const CMatrix p01 = half * (id + i * cs);
    const CMatrix q10 = half * (id - i * cs.transpose());
    const CMatrix q01 = half * (id + i * cs.transpose());

    CVector z(v.begin(), v.begin() + 4);
    CVector xi(v.begin() + 4, v.end());
    const CVector z10 = p10 * z, z01 = p01 * z, xi10 = q10 * xi, xi01 = q01 * xi;

    const CMatrix wj = flat::form_map(scaled(t, flat::omega_J()));
    const CMatrix wk = flat::form_map(scaled(t, flat::omega_K()));
    const CMatrix wj_inv = inverse(wj), wk_inv = inverse(wk);

    const Rational n = zeta.norm();
    const GaussRational plus = GaussRational(1 + n) * i;
    const GaussRational minus = GaussRational(1 - n) * i;
    const GaussRational two_im(Rational(2 * zeta.im())), two_re(Rational(2 * zeta.re()));

    auto combine = [](const CVector& a, const GaussRational& s, const CVector& b) {
        CVector out = a;
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += s * b[k];
        return out;
    };
    auto scale = [](const GaussRational& s, CVector a) {
        for (auto& x : a) x *= s;
        return a;
    };

    // (1+|z|^2) i v = (1-|z|^2) J_I v - 2 Im z J_{w_J} v + 2 Re z J_{w_K} v, by type.
    CVector r_z10 = combine(scale(plus + minus, z10), -two_im, wj_inv * xi10);
    r_z10 = combine(r_z10, two_re, wk_inv * xi10);
    CVector r_z01 = combine(scale(plus - minus, z01), -two_im, wj_inv * xi01);
    r_z01 = combine(r_z01, two_re, wk_inv * xi01);
    CVector r_xi10 = combine(scale(plus - minus, xi10), two_im, wj * z10);
    r_xi10 = combine(r_xi10, -two_re, wk * z10);
    CVector r_xi01 = combine(scale(plus + minus, xi01), two_im, wj * z01);
    r_xi01 = combine(r_xi01, -two_re, wk * z01);
    return {r_z10, r_z01, r_xi10, r_xi01};
}

CMatrix twistor_form(const GaussRational& zeta) {
    return flat::sigma() + (2 * zeta) * flat::omega_I() - (zeta * zeta) * flat::sigma_bar();
}

CMatrix twistor_pointwise_graph(const GaussRational& zeta, const Rational& t) {
    if (t <= 1) throw Error("t must exceed 1");
    const Subspace k = kernel(flat::form_map(twistor_form(zeta)));
    return graph_extract(k.transformed(inverse(flat::tangent_frame())), 2);
}

CMatrix twistor_graph_closed_form(const GaussRational& zeta) {
    const CMatrix s_inv = inverse(flat::restrict_10_to_10(flat::sigma()));
    return (-2 * zeta) * (s_inv * flat::restrict_01_to_10(flat::omega_I()));
}

} // namespace k3fm
