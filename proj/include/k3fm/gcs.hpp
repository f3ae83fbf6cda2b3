#pragma once

#include <array>

#include "k3fm/linalg.hpp"

namespace k3fm {

/// Constant-coefficient local model of a K3 on R^4 with coordinates
/// (x1, y1, x2, y2) and z_k = x_k + i y_k.
///
/// Tangent vectors use the basis (d/dx1, d/dy1, d/dx2, d/dy2), one-forms the
/// dual basis (dx1, dy1, dx2, dy2). A two-form w is stored as its component
/// matrix w(a, b) = w(e_a, e_b); its map T -> T* is X -> iota_X w.
namespace flat {

/// Complex structure I with I d/dx = d/dy, I d/dy = -d/dx.
CMatrix complex_structure();
/// dx1^dy1 + dx2^dy2.
CMatrix omega_I();
/// dz1^dz2.
CMatrix sigma();
CMatrix sigma_bar();
/// Re sigma and Im sigma.
CMatrix omega_J();
CMatrix omega_K();

/// Component matrix of u ^ v for one-forms u, v.
CMatrix wedge_one_forms(const CVector& u, const CVector& v);
/// Matrix of X -> iota_X w.
CMatrix form_map(const CMatrix& w);
/// w(X, Y).
GaussRational form_value(const CMatrix& w, const CVector& x, const CVector& y);
/// Entrywise real and imaginary parts of a complex form.
CMatrix real_form(const CMatrix& w);
CMatrix imag_form(const CMatrix& w);

/// d/dz_k, d/dzbar_k in real coordinates (k = 0, 1).
CVector d_z(int k);
CVector d_zbar(int k);
/// dz_k, dzbar_k in real coordinates.
CVector dz(int k);
CVector dzbar(int k);

/// Columns (d/dzbar1, d/dzbar2, d/dz1, d/dz2): T^{0,1} first.
CMatrix tangent_frame();
/// Columns of T + T*: (d/dzbar1, d/dzbar2, dz1, dz2 | dzbar1, dzbar2, d/dz1, d/dz2),
/// i.e. T^{0,1} + Omega^{1,0} first, then Omega^{0,1} + T^{1,0}.
CMatrix generalized_frame();

/// Matrix of Z -> iota_Z w from T^{0,1} (d/dzbar basis) to Omega^{0,1} (dzbar basis).
CMatrix restrict_01_to_01(const CMatrix& w);
/// Matrix of Z -> iota_Z w from T^{1,0} to Omega^{1,0}.
CMatrix restrict_10_to_10(const CMatrix& w);
/// Matrix of Z -> iota_Z w from T^{0,1} to Omega^{1,0}.
CMatrix restrict_01_to_10(const CMatrix& w);

/// Action of the bivector sigma^-1 on Omega^{1,0} -> T^{1,0}, normalized by
/// sigma^-1 -| sigma = 4. Equals 4 times the inverse of Z -> iota_Z sigma.
CMatrix sigma_inverse_bivector();
/// Full contraction of the bivector 4 d/dz1 ^ d/dz2 with the form w
/// (determinant pairing), used to pin the normalization above.
GaussRational bivector_contraction(const CMatrix& w);

} // namespace flat

/// Generalized complex structure on the flat model: an 8x8 endomorphism of
/// (T + T*) (x) C, with blocks [[A, P], [Q, D]] on (X; xi).
class GCStructure {
public:
    GCStructure() : m_(8, 8) {}
    explicit GCStructure(CMatrix m);

    const CMatrix& matrix() const noexcept { return m_; }
    CMatrix block_TT() const { return m_.block(0, 0, 4, 4); }
    CMatrix block_TstarT() const { return m_.block(0, 4, 4, 4); }
    CMatrix block_TTstar() const { return m_.block(4, 0, 4, 4); }
    CMatrix block_TstarTstar() const { return m_.block(4, 4, 4, 4); }

    bool squares_to_minus_identity() const;
    /// <Jv, Jw> = <v, w> for <X+xi, Y+eta> = (xi(Y) + eta(X))/2.
    bool is_orthogonal() const;

    GCStructure operator-() const { return GCStructure(-m_); }
    friend bool operator==(const GCStructure& a, const GCStructure& b) = default;

private:
    CMatrix m_;
};

/// (1/2)[[0, Id], [Id, 0]].
CMatrix natural_pairing();

/// [[-I, 0], [0, I^*]].
GCStructure j_complex();
/// [[0, -w^-1], [w, 0]]. Throws DegenerateForm if w is singular.
GCStructure j_symplectic(const CMatrix& omega);
/// [[1, 0], [-B, 1]] J [[1, 0], [B, 1]].
GCStructure b_transform(const GCStructure& j, const CMatrix& b);

/// Rational stand-ins for the spherical angles of a point zeta: cos(theta),
/// sin(theta)cos(phi), sin(theta)sin(phi), and sin^2(theta).
struct SphericalPoint {
    Rational cos_theta;
    Rational sin_theta_cos_phi;
    Rational sin_theta_sin_phi;
    Rational sin2_theta;
};
SphericalPoint spherical_point(const GaussRational& zeta);

/// cos(theta) J_I + sin(theta) J_{omega_J} for omega_J = Re(t sigma).
GCStructure j_theta(const Rational& cos_theta, const Rational& sin_theta, const Rational& t);

/// ((1-|z|^2) J_I - 2 Im z J_{omega_J} + 2 Re z J_{omega_K}) / (1+|z|^2),
/// with omega_J + i omega_K = t sigma.
GCStructure j_zeta(const GaussRational& zeta, const Rational& t);
/// The point at infinity, J_{-I} = -J_I.
GCStructure j_zeta_infinity();

/// Symplectic form and B-field with J_zeta = e^{-B} J_omega e^{B}, read off
/// from the spherical coordinates: omega = csc(theta)(cos(phi) w_J + sin(phi) w_K),
/// B = cot(theta)(sin(phi) w_J - cos(phi) w_K). Requires zeta != 0.
struct TwistedSymplectic {
    CMatrix b;
    CMatrix omega;
};
TwistedSymplectic spherical_bfield_data(const GaussRational& zeta, const Rational& t);

/// Graph of the +i eigenspace of J_zeta over T^{0,1} + Omega^{1,0}, in the
/// coordinates of flat::generalized_frame(). Throws NotAGraph.
CMatrix deformation_graph_Y(const GaussRational& zeta, const Rational& t);
/// Closed form: diag((zeta t / 2) sigmabar_Y, -(zeta / 2t) sigma_Y^-1).
CMatrix deformation_graph_Y_closed_form(const GaussRational& zeta, const Rational& t);

/// Residuals of the four component equations for membership of v in the +i
/// eigenspace of J_zeta, split by type with respect to I.
std::array<CVector, 4> eigen_equation_residuals(const GaussRational& zeta, const Rational& t, const CVector& v);

/// sigma + 2 zeta omega_I - zeta^2 sigmabar on the flat model.
CMatrix twistor_form(const GaussRational& zeta);
/// Graph T^{0,1} -> T^{1,0} of the kernel of twistor_form(zeta). The flat model
/// does not depend on t; t only has to lie in (1, inf). Throws NotAGraph.
CMatrix twistor_pointwise_graph(const GaussRational& zeta, const Rational& t);
/// -2 zeta sigma^-1 omega_I as a map T^{0,1} -> T^{1,0}.
CMatrix twistor_graph_closed_form(const GaussRational& zeta);

} // namespace k3fm
