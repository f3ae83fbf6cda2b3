#include "k3fm/checks.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <set>
#include <sstream>

#include <json.hpp>

#include "k3fm/errors.hpp"
#include "k3fm/families.hpp"
#include "k3fm/gcs.hpp"
#include "k3fm/mirror.hpp"
#include "k3fm/parser.hpp"
#include "k3fm/properties.hpp"
#include "k3fm/spinor.hpp"

namespace k3fm {

std::vector<Rational> default_t_grid() { return {Rational(3, 2), 2, 5, 10, 100}; }

std::vector<GaussRational> default_zeta_grid() {
    const auto q = [](long n, long d) { return Rational(n, d); };
    return {
        {q(1, 2)},         {q(1, 3)},         {0, 1},           {q(3, 5), q(4, 5)}, {-1},
        {1},               {2},               {0, q(-1, 2)},    {q(1, 2), q(1, 3)}, {q(1, 2), q(1, 2)},
        {3},               {-2, 1},           {q(4, 5), q(-3, 5)}, {0, q(1, 4)},    {q(-1, 3), 2},
        {q(5, 4)},         {q(1, 3), q(-2, 3)}, {2, 2},         {q(-3, 2), q(-1, 2)}, {0, q(7, 5)},
    };
}

namespace {

using Records = std::vector<CheckDescriptor>;

// ---------------------------------------------------------------------------
// Record helpers

template <typename T>
std::string residual(const T& got, const T& want) {
    const T d = got - want;
    return d.is_zero() ? "0" : d.to_string();
}

template <typename T>
void expect_equal(Records& out, const std::string& name, const std::string& params, const T& got, const T& want) {
    std::string w = residual(got, want);
    const bool pass = w == "0";
    out.push_back({name, "", params, pass, std::move(w)});
}

void expect_true(Records& out, const std::string& name, const std::string& params, bool ok,
                 const std::string& failure) {
    out.push_back({name, "", params, ok, ok ? "0" : failure});
}

template <typename E, typename Fn>
void expect_throw(Records& out, const std::string& name, const std::string& params, Fn fn) {
    try {
        fn();
    } catch (const E&) {
        out.push_back({name, "", params, true, "0"});
        return;
    } catch (const std::exception& e) {
        out.push_back({name, "", params, false, std::string("wrong error: ") + e.what()});
        return;
    }
    out.push_back({name, "", params, false, "no error raised"});
}

std::string str(const Rational& q) { return q.get_str(); }

std::string sample(const GaussRational& z, const Rational& t) { return "t=" + str(t) + " zeta=" + z.to_string(); }

HTClass ht(std::string_view src) { return std::get<HTClass>(parse_class_expr(src, ClassContext::Harmonic)); }
CohClass coh(std::string_view src) { return std::get<CohClass>(parse_class_expr(src, ClassContext::Cohomology)); }

const Scalar kT = Scalar::t();
const Scalar kZeta = Scalar::zeta();

// ---------------------------------------------------------------------------
// Lattice suites

Records phi_omega_table(const RunConfig&) {
    Records out;
    const std::vector<std::pair<std::string, std::string>> table{
        {"one", "-C - F"}, {"eta", "F"}, {"C", "one + eta"}, {"F", "-eta"},
    };
    for (const auto& [src, dst] : table) {
        expect_equal(out, "phiOmega-table", "basis=" + src, phi_homega(coh(src)), coh(dst));
    }
    return out;
}

const std::vector<std::pair<std::string, CohClass>>& coh_basis() {
    static const std::vector<std::pair<std::string, CohClass>> basis{
        {"one", CohClass::one()},     {"C", CohClass::C()},          {"F", CohClass::F()},
        {"sigma", CohClass::sigma()}, {"sigmabar", CohClass::sigmabar()}, {"eta", CohClass::eta()},
    };
    return basis;
}

Records phi_omega_isometry(const RunConfig&) {
    Records out;
    const auto& basis = coh_basis();
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a; b < basis.size(); ++b) {
            const auto& [na, xa] = basis[a];
            const auto& [nb, xb] = basis[b];
            expect_equal(out, "phiOmega-isometry", "pair=(" + na + "," + nb + ")",
                         mukai_pairing(phi_homega(xa), phi_homega(xb)), mukai_pairing(xa, xb));
        }
    }
    return out;
}

Records phi_omega_duality(const RunConfig&) {
    Records out;
    for (const char* src : {"one", "C", "F", "eta"}) {
        const CohClass x = coh(src);
        expect_equal(out, "phiOmega-duality", std::string("basis=") + src, phi_homega_dual(phi_homega(x)), -x);
    }
    return out;
}

Records contraction_table(const RunConfig&) {
    Records out;
    expect_equal(out, "contraction-table", "basis=sigma^-1", contract_sigma(ht("sigma^-1")), coh("4*one"));
    expect_equal(out, "contraction-table", "basis=sigmabar", contract_sigma(ht("sigmabar")),
                 wedge(CohClass::sigma(), CohClass::sigmabar()));
    expect_equal(out, "contraction-table", "basis=sigma^-1*C", contract_sigma(ht("sigma^-1*C")), coh("C"));
    expect_equal(out, "contraction-table", "basis=sigma^-1*F", contract_sigma(ht("sigma^-1*F")), coh("F"));
    return out;
}

Records phi_ht_table(const RunConfig&) {
    Records out;
    const std::vector<std::pair<std::string, std::string>> table{
        {"1/4*sigma^-1", "-sigma^-1*C - sigma^-1*F"},
        {"1/4*sigmabar", "sigma^-1*F"},
        {"sigma^-1*C", "1/4*sigma^-1 + 1/4*sigmabar"},
        {"sigma^-1*F", "-1/4*sigmabar"},
    };
    for (const auto& [src, dst] : table) expect_equal(out, "phiHT-table", "basis=" + src, phi_ht(ht(src)), ht(dst));
    return out;
}

Records phi_t_table(const RunConfig&) {
    Records out;
    const std::vector<std::pair<std::string, std::string>> table{
        {"1/4*sigma^-1", "-sigma^-1*C - 2*sigma^-1*F"},
        {"1/4*sigmabar", "sigma^-1*F"},
        {"sigma^-1*C", "1/4*sigma^-1 + 2/4*sigmabar"},
        {"sigma^-1*F", "-1/4*sigmabar"},
    };
    for (const auto& [src, dst] : table) expect_equal(out, "phiT-table", "basis=" + src, phi_t(ht(src)), ht(dst));
    return out;
}

Records todd_rule(const RunConfig&) {
    Records out;
    const CohClass td = todd_half(+1);
    for (const char* src : {"sigma^-1", "sigma^-1*C", "sigma^-1*F", "sigmabar"}) {
        const HTClass x = ht(src);
        expect_equal(out, "todd-rule", std::string("basis=") + src, contract_sigma(todd_contract(x, +1)),
                     wedge(td, contract_sigma(x)));
    }
    return out;
}

Records bfield_correction_suite(const RunConfig& cfg) {
    Records out;
    if (cfg.symbolic) {
        expect_equal(out, "bfield-correction", "phi_T symbolic", bfield_correction(kT), ht("-1/(2*t)*sigmabar"));
        expect_equal(out, "bfield-correction", "phi_HT symbolic", untwisted_correction(kT), HTClass{});
    }
    if (cfg.sampled) {
        for (const Rational& t : cfg.t_grid) {
            const HTClass got = bfield_correction(kT).substitute(t, 0);
            expect_equal(out, "bfield-correction", "t=" + str(t), got, HTClass{0, 0, 0, Scalar(Rational(Rational(-1, 2) / t))});
            expect_equal(out, "bfield-correction", "phi_HT t=" + str(t), phi_ht(direction_X(Scalar(t))),
                         direction_Y(Scalar(t)));
        }
    }
    return out;
}

Records bfield_decay(const RunConfig&) {
    Records out;
    const auto values = correction_decay(6);
    std::string trace;
    for (const auto& v : values) trace += (trace.empty() ? "" : ", ") + v.to_string();
    expect_true(out, "bfield-decay", "t=10^k k=1..6", is_strictly_shrinking(values), "not shrinking: " + trace);
    return out;
}

Records kahler_class(const RunConfig& cfg) {
    Records out;
    std::vector<Scalar> ts;
    if (cfg.symbolic) ts.push_back(kT);
    if (cfg.sampled)
        for (const Rational& t : cfg.t_grid) ts.emplace_back(t);
    for (const Scalar& t : ts) {
        const FamilyReport report = kahler_checks(t);
        for (const auto& [label, ok] : report.verdicts) {
            expect_true(out, "kahler-class", "t=" + report.tag + ": " + label, ok, "identity fails");
        }
        expect_true(out, "kahler-class", "t=" + report.tag + ": report reproducible", report == kahler_checks(t),
                    "recomputation differs");
    }
    expect_equal(out, "kahler-class", "t=1: alpha = C + 2F", alpha_class(Scalar(1)), coh("C + 2*F"));
    return out;
}

Records period_identities(const RunConfig&) {
    Records out;
    const CohClass period = twistor_period(kT, kZeta);
    expect_equal(out, "period-identities", "(sigma + 2 zeta alpha - zeta^2 sigmabar)^2", intersection(period, period),
                 Scalar(0));
    expect_equal(out, "period-identities", "cup product of the period with itself", wedge(period, period),
                 CohClass{});
    const CohClass first_order = CohClass::sigma() + Scalar(2) * kZeta * CohClass::F();
    expect_equal(out, "period-identities", "(sigma + 2 zeta F)^2", intersection(first_order, first_order), Scalar(0));
    expect_equal(out, "period-identities", "phiOmega(twistor period) = spinor class", phi_homega(period),
                 gualtieri_spinor_class(kT, kZeta));
    return out;
}

Records direction_lattice(const RunConfig&) {
    Records out;
    expect_equal(out, "direction-lattice", "X twistor family",
                 direction_from_spinor_family(SpinorFamily::XTwistor, kT), direction_X(kT));
    expect_equal(out, "direction-lattice", "X closed form", direction_X(kT),
                 ht("(-2/t)*sigma^-1*C + (-2*(t^2+1)/t)*sigma^-1*F"));
    expect_equal(out, "direction-lattice", "Y spinor family",
                 direction_from_spinor_family(SpinorFamily::YGualtieri, kT), direction_Y(kT));
    expect_equal(out, "direction-lattice", "Y closed form", direction_Y(kT), ht("1/2*(-1/t*sigma^-1 + t*sigmabar)"));
    expect_equal(out, "direction-lattice", "family without zeta term", direction_from_class(CohClass::sigma()),
                 HTClass{});
    return out;
}

Records limits(const RunConfig&) {
    Records out;
    expect_equal(out, "limits", "u_1", u_one(), ht("-2*sigma^-1*C - 4*sigma^-1*F"));
    expect_equal(out, "limits", "phi_T(u_1)", phi_t(u_one()), ht("-1/2*sigma^-1"));
    expect_equal(out, "limits", "u_inf", u_inf(), ht("-2*sigma^-1*F"));
    expect_equal(out, "limits", "v_inf", v_inf(), ht("1/2*sigmabar"));
    expect_equal(out, "limits", "phi_T(u_inf) = v_inf", phi_t(u_inf()), v_inf());
    return out;
}

// ---------------------------------------------------------------------------
// Flat-model suites

std::vector<GaussRational> nonzero(const std::vector<GaussRational>& zs) {
    std::vector<GaussRational> out;
    std::copy_if(zs.begin(), zs.end(), std::back_inserter(out), [](const auto& z) { return !z.is_zero(); });
    return out;
}

Records spinor_exp_identity(const RunConfig& cfg) {
    Records out;
    if (!cfg.sampled) return out;
    const Spinor s = sigma_spinor(), sb = sigmabar_spinor();
    for (const auto& z : nonzero(cfg.zeta_grid)) {
        for (const Rational& t : cfg.t_grid) {
            const auto [b, w] = bfield_symplectic_data(z, t);
            const GaussRational tt(t);
            const Spinor lhs = wedge(exp_two_form(b), exp_two_form(GaussRational::i() * w));
            const Spinor rhs = Spinor::scalar(1) + (tt / (2 * z)) * s - (z * tt / 2) * sb -
                               (GaussRational(Rational(1, 4)) * tt * tt) * wedge(s, sb);
            expect_equal(out, "spinor-exp-identity", sample(z, t), lhs, rhs);
            expect_equal(out, "spinor-exp-identity", sample(z, t) + " rescaled", (2 * z) * lhs, family_spinor(z, t));
        }
    }
    return out;
}

BasicSpinor<Scalar> zeta_part(const BasicSpinor<Scalar>& s, int k) {
    BasicSpinor<Scalar> out;
    for (unsigned m = 0; m < BasicSpinor<Scalar>::kSize; ++m)
        for (const auto& [e, c] : s[m].terms())
            if (e[1] == k) out[m] += Scalar::monomial(c, {e[0], 0, e[2]});
    return out;
}

Records spinor_specializations(const RunConfig& cfg) {
    Records out;
    const Spinor s = sigma_spinor(), sb = sigmabar_spinor();
    if (cfg.sampled) {
        for (const Rational& t : cfg.t_grid) {
            expect_true(out, "spinor-specializations", "t=" + str(t) + " zeta=0 gives sigma",
                        equal_up_to_scale(family_spinor(0, t), s), family_spinor(0, t).to_string());
            expect_true(out, "spinor-specializations", "t=" + str(t) + " zeta=inf gives sigmabar",
                        equal_up_to_scale(family_spinor_infinity(t), sb), family_spinor_infinity(t).to_string());
            for (const auto& z : nonzero(cfg.zeta_grid)) {
                const auto [b, w] = bfield_symplectic_data(z, t);
                const TwistedSymplectic sph = spherical_bfield_data(z, t);
                expect_equal(out, "spinor-specializations", sample(z, t) + " omega from spherical angles", w,
                             Spinor::from_two_form(sph.omega));
                expect_equal(out, "spinor-specializations", sample(z, t) + " B from spherical angles", b,
                             Spinor::from_two_form(sph.b));
                if (z.norm() == 1) {
                    expect_equal(out, "spinor-specializations", sample(z, t) + " |zeta|=1 has B=0", b, Spinor{});
                }
            }
        }
        // B = ((1-|z|^2)/(2|z|^2)) Re(conj(z) sigma) at z = 1/2, t = 1.
        const GaussRational z(Rational(1, 2));
        const Spinor re_zbar_sigma = GaussRational(Rational(1, 2)) * (z.conj() * s + z * sb);
        expect_equal(out, "spinor-specializations", "t=1 zeta=1/2 B closed form", bfield_symplectic_data(z, 1).first,
                     GaussRational((1 - z.norm()) / (2 * z.norm())) * re_zbar_sigma);
    }
    expect_throw<PoleAtZero>(out, "spinor-specializations", "zeta=0 has no B-field",
                             [] { bfield_symplectic_data(0, 2); });
    if (cfg.symbolic) {
        const BasicSpinor<Scalar> fam = family_spinor_symbolic();
        const BasicSpinor<Scalar> ls = lift(s), lsb = lift(sb);
        const auto one = BasicSpinor<Scalar>::scalar(1);
        expect_equal(out, "spinor-specializations", "zeta^0 coefficient", zeta_part(fam, 0), kT * ls);
        expect_equal(out, "spinor-specializations", "zeta^1 coefficient", zeta_part(fam, 1),
                     Scalar(2) * (one - (Scalar(Rational(1, 4)) * kT * kT) * wedge(ls, lsb)));
        expect_equal(out, "spinor-specializations", "zeta^2 coefficient", zeta_part(fam, 2), -(kT * lsb));
        expect_equal(out, "spinor-specializations", "no other powers of zeta",
                     zeta_part(fam, 0) + kZeta * zeta_part(fam, 1) + kZeta * kZeta * zeta_part(fam, 2), fam);
    }
    return out;
}

Records jzeta_algebra(const RunConfig& cfg) {
    Records out;
    const GCStructure jc = j_complex();
    expect_true(out, "jzeta-algebra", "J_I squares to -1", jc.squares_to_minus_identity(), jc.matrix().to_string());
    const GCStructure jw = j_symplectic(flat::omega_J());
    expect_true(out, "jzeta-algebra", "J_omega_J orthogonal", jw.is_orthogonal(), jw.matrix().to_string());
    expect_throw<DegenerateForm>(out, "jzeta-algebra", "degenerate omega rejected",
                                 [] { j_symplectic(flat::wedge_one_forms({1, 0, 0, 0}, {0, 1, 0, 0})); });
    const GCStructure jinf = j_zeta_infinity();
    expect_equal(out, "jzeta-algebra", "J_inf = -J_I", jinf.matrix(), (-jc).matrix());
    expect_true(out, "jzeta-algebra", "J_inf squares to -1", jinf.squares_to_minus_identity(), "");
    expect_true(out, "jzeta-algebra", "eigenspace of J_inf is conjugate of eigenspace of J_I",
                eigenspace_i(jinf.matrix()) == eigenspace_i(jc.matrix()).conj(), "eigenspaces differ");
    if (!cfg.sampled) return out;
    for (const Rational& t : cfg.t_grid) {
        expect_equal(out, "jzeta-algebra", "t=" + str(t) + " zeta=0 is J_I", j_zeta(0, t).matrix(), jc.matrix());
        for (const auto& z : cfg.zeta_grid) {
            const GCStructure j = j_zeta(z, t);
            expect_true(out, "jzeta-algebra", sample(z, t) + " square", j.squares_to_minus_identity(),
                        (j.matrix() * j.matrix() + CMatrix::identity(8)).to_string());
            expect_true(out, "jzeta-algebra", sample(z, t) + " orthogonal", j.is_orthogonal(),
                        (j.matrix().transpose() * natural_pairing() * j.matrix() - natural_pairing()).to_string());
            if (!z.is_zero()) {
                const Subspace l = eigenspace_i(j.matrix());
                expect_true(out, "jzeta-algebra", sample(z, t) + " L + conj(L) = everything",
                            l.dim() == 4 && l.sum(l.conj()).dim() == 8, "L meets its conjugate");
            }
            if (z.norm() == 1) {
                const bool symplectic = j.block_TT().is_zero() && j.block_TstarTstar().is_zero();
                expect_true(out, "jzeta-algebra", sample(z, t) + " |zeta|=1 symplectic type",
                            symplectic && spherical_point(z).cos_theta == 0, "nonzero J_I component");
            }
        }
    }
    return out;
}

Records jtheta_factorization(const RunConfig& cfg) {
    Records out;
    if (!cfg.sampled) return out;
    for (const Rational& t : cfg.t_grid) {
        for (const Rational& r : {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
            // zeta = -i r has phi = 0: cos(theta) = (1-r^2)/(1+r^2), sin(theta) = 2r/(1+r^2).
            const GaussRational z(0, -r);
            Rational c = (1 - r * r) / (1 + r * r), s = 2 * r / (1 + r * r);
            c.canonicalize();
            s.canonicalize();
            const CMatrix wj = GaussRational(t) * flat::omega_J();
            const CMatrix wk = GaussRational(t) * flat::omega_K();
            const GCStructure factored =
                b_transform(j_symplectic(GaussRational(Rational(1 / s)) * wj), GaussRational(Rational(-c / s)) * wk);
            const std::string p = "t=" + str(t) + " theta: cos=" + str(c) + " sin=" + str(s);
            expect_equal(out, "jtheta-factorization", p, factored.matrix(), j_theta(c, s, t).matrix());
            expect_equal(out, "jtheta-factorization", p + " matches J_zeta", j_theta(c, s, t).matrix(),
                         j_zeta(z, t).matrix());
        }
        for (const auto& z : nonzero(cfg.zeta_grid)) {
            const auto [b, w] = bfield_symplectic_data(z, t);
            // Spinor coefficients back to component matrices.
            CMatrix bm(4, 4), wm(4, 4);
            for (unsigned a = 0; a < 4; ++a)
                for (unsigned c = a + 1; c < 4; ++c) {
                    const unsigned m = (1u << a) | (1u << c);
                    bm(a, c) = b[m];
                    bm(c, a) = -b[m];
                    wm(a, c) = w[m];
                    wm(c, a) = -w[m];
                }
            expect_equal(out, "jtheta-factorization", sample(z, t) + " e^-B J_omega e^B",
                         b_transform(j_symplectic(wm), bm).matrix(), j_zeta(z, t).matrix());
        }
    }
    return out;
}

Records spinor_structure_match(const RunConfig& cfg) {
    Records out;
    const auto check = [&](const std::string& p, const Spinor& rho, const GCStructure& j) {
        const Subspace ann = clifford_annihilator(rho);
        const Subspace eig = eigenspace_i(j.matrix());
        expect_true(out, "spinor-structure-match", p, ann == eig && is_isotropic(ann),
                    "annihilator " + ann.basis().to_string() + " vs eigenspace " + eig.basis().to_string());
    };
    check("rho=sigma", sigma_spinor(), j_complex());
    check("rho=exp(i omega_J)", exp_two_form(GaussRational::i() * Spinor::from_two_form(flat::omega_J())),
          j_symplectic(flat::omega_J()));
    expect_true(out, "spinor-structure-match", "1 + vol is not pure", !is_pure(Spinor::scalar(1) + Spinor::basis(15)),
                "annihilator has dimension 4");
    expect_throw<ZeroSpinor>(out, "spinor-structure-match", "zero spinor rejected",
                             [] { clifford_annihilator(Spinor{}); });
    if (!cfg.sampled) return out;
    for (const Rational& t : cfg.t_grid) {
        check("t=" + str(t) + " zeta=inf", family_spinor_infinity(t), j_zeta_infinity());
        for (const auto& z : cfg.zeta_grid) {
            const Spinor rho = family_spinor(z, t);
            check(sample(z, t), rho, j_zeta(z, t));
            expect_true(out, "spinor-structure-match", sample(z, t) + " scale invariance",
                        clifford_annihilator(GaussRational(3, -2) * rho) == clifford_annihilator(rho),
                        "annihilator changed under scaling");
        }
    }
    return out;
}

Records direction_graph_x(const RunConfig& cfg) {
    Records out;
    if (!cfg.sampled) return out;
    for (const Rational& t : cfg.t_grid) {
        for (const auto& z : cfg.zeta_grid) {
            const Subspace k = kernel(flat::form_map(twistor_form(z)));
            expect_true(out, "direction-graph-X", sample(z, t) + " kernel dimension", k.dim() == 2,
                        "dimension " + std::to_string(k.dim()));
            expect_equal(out, "direction-graph-X", sample(z, t), twistor_pointwise_graph(z, t),
                         twistor_graph_closed_form(z));
        }
    }
    return out;
}

Records direction_graph_y(const RunConfig& cfg) {
    Records out;
    expect_equal(out, "direction-graph-Y", "sigma^-1 -| sigma", flat::bivector_contraction(flat::sigma()),
                 GaussRational(4));
    if (!cfg.sampled) return out;
    for (const Rational& t : cfg.t_grid) {
        for (const auto& z : cfg.zeta_grid) {
            expect_equal(out, "direction-graph-Y", sample(z, t), deformation_graph_Y(z, t),
                         deformation_graph_Y_closed_form(z, t));
        }
        const auto& zs = cfg.zeta_grid;
        for (std::size_t k = 0; k + 1 < zs.size(); k += 2) {
            expect_equal(out, "direction-graph-Y",
                         "t=" + str(t) + " linear in zeta at " + zs[k].to_string() + ", " + zs[k + 1].to_string(),
                         deformation_graph_Y(zs[k] + zs[k + 1], t),
                         deformation_graph_Y(zs[k], t) + deformation_graph_Y(zs[k + 1], t));
        }
    }
    return out;
}

Records direction_eigen_equations(const RunConfig& cfg) {
    Records out;
    if (!cfg.sampled) return out;
    for (const Rational& t : cfg.t_grid) {
        for (const auto& z : cfg.zeta_grid) {
            std::string failure;
            for (const auto& v : eigenspace_i(j_zeta(z, t).matrix()).vectors()) {
                const auto res = eigen_equation_residuals(z, t, v);
                for (std::size_t e = 0; e < res.size(); ++e)
                    for (const auto& x : res[e])
                        if (!x.is_zero() && failure.empty()) failure = "equation " + std::to_string(e + 1) + ": " + x.to_string();
            }
            expect_true(out, "direction-eigen-equations", sample(z, t), failure.empty(), failure);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Mirror suites

Records mirror_thm4(const RunConfig& cfg) {
    Records out;
    const HyperbolicFrame frame = HyperbolicFrame::standard();
    expect_true(out, "mirror-thm4", "frame (F, C) is hyperbolic", frame.is_valid(), "intersection numbers wrong");
    if (cfg.symbolic) {
        const MirrorIdentity r = verify_theorem4(kT, kZeta);
        expect_true(out, "mirror-thm4", "symbolic", r.holds, r.residual.to_string());
        expect_equal(out, "mirror-thm4", "symbolic F.Re(sigma_zeta) = 1/t", r.normalizer, Scalar(1) / kT);
        const CohClass period = normalized_twistor_period(kT, kZeta);
        expect_equal(out, "mirror-thm4", "symbolic sigma_zeta^2 = 0", intersection(period, period), Scalar(0));
        expect_equal(out, "mirror-thm4", "symbolic F.Im(sigma_zeta) = 0", intersection(CohClass::F(), imag_part(period)),
                     Scalar(0));
        const CohClass raw = period / r.normalizer - CohClass::C() - gualtieri_kahler_class(kT, kZeta);
        expect_true(out, "mirror-thm4", "symbolic difference is a multiple of F",
                    raw.a.is_zero() && raw.cC.is_zero() && raw.cs.is_zero() && raw.csb.is_zero() && raw.b.is_zero(),
                    raw.to_string());
        expect_throw<NonUnitNormalizer>(out, "mirror-thm4", "symbolic swapped frame (C <-> F)",
                                        [] { verify_theorem4(kT, kZeta, HyperbolicFrame::swapped()); });
    }
    expect_throw<DegeneratePeriod>(out, "mirror-thm4", "period with F.Re(sigma) = 0",
                                   [] { gross_mirror({CohClass::sigma(), std::nullopt}, HyperbolicFrame::standard()); });
    if (cfg.sampled) {
        const GaussRational z0(Rational(1, 2), Rational(1, 3));
        const MirrorIdentity swapped = verify_theorem4(Scalar(2), Scalar(z0), HyperbolicFrame::swapped());
        expect_true(out, "mirror-thm4", "t=2 zeta=" + z0.to_string() + " swapped frame (C <-> F) fails",
                    !swapped.holds, "identity unexpectedly holds");
        for (const Rational& t : cfg.t_grid) {
            for (const auto& z : nonzero(cfg.zeta_grid)) {
                const MirrorIdentity r = verify_theorem4(Scalar(t), Scalar(z));
                expect_true(out, "mirror-thm4", sample(z, t), r.holds, r.residual.to_string());
            }
        }
    }
    return out;
}

// Normalized rational triple: P = Re sigma_basis, R = Im sigma_basis, P^2 = R^2 = 2.
MirrorTriple synthetic_triple() {
    const CohClass p = coh("1/2*(sigma + sigmabar)");
    const CohClass r = coh("-1/2*i*(sigma - sigmabar)");
    const CohClass period = Scalar(2) * CohClass::C() + Scalar(2) * CohClass::F() + p + Scalar::i() * r;
    const CohClass kahler = Scalar(Rational(1, 2)) * r + Scalar(3) * CohClass::F() + Scalar::i() * (p - CohClass::F());
    return {period, kahler};
}

Records mirror_normalization(const RunConfig&) {
    Records out;
    const HyperbolicFrame frame = HyperbolicFrame::standard();
    const MirrorTriple tr = synthetic_triple();
    const CohClass& period = *tr.period;
    const CohClass& kahler = *tr.complexified_kahler;
    const CohClass re = real_part(period), im = imag_part(period), om = imag_part(kahler);
    expect_true(out, "mirror-normalization", "input triple is normalized",
                intersection(period, period).is_zero() && intersection(im, CohClass::F()).is_zero() &&
                    intersection(om, re).is_zero() && intersection(om, im).is_zero() &&
                    intersection(real_part(kahler), CohClass::F()).is_zero(),
                "input violates a normalization");

    const NormalizedClasses n = normalize_mod_F(mirror_classes(tr, frame), frame);
    const auto constraints = normalization_constraints(n.classes, frame);
    const char* labels[6] = {"Re^2 = Im^2", "Im^2 = omega^2", "omega.Re = 0", "omega.Im = 0", "Re.Im = 0", "B.F = 0"};
    for (std::size_t k = 0; k < constraints.size(); ++k)
        expect_equal(out, "mirror-normalization", std::string("synthetic: ") + labels[k], constraints[k], Scalar(0));

    MirrorClasses perturbed = n.classes;
    perturbed.b += Scalar(5) * CohClass::F();
    perturbed.omega += Scalar(-3) * CohClass::F();
    perturbed.re_sigma += Scalar(Rational(2, 7)) * CohClass::F();
    perturbed.im_sigma += Scalar(1) * CohClass::F();
    const NormalizedClasses back = normalize_mod_F(perturbed, frame);
    expect_true(out, "mirror-normalization", "perturbation round trip", back.classes == n.classes,
                "recovered " + back.classes.re_sigma.to_string());
    const std::array<Scalar, 4> shifts{Scalar(-5), Scalar(3), Scalar(Rational(-2, 7)), Scalar(-1)};
    expect_true(out, "mirror-normalization", "perturbation multipliers recovered", back.multipliers == shifts,
                "multipliers differ");
    const NormalizedClasses fixed = normalize_mod_F(n.classes, frame);
    expect_true(out, "mirror-normalization", "normalized classes are a fixed point",
                std::all_of(fixed.multipliers.begin(), fixed.multipliers.end(), [](const Scalar& s) { return s.is_zero(); }),
                "nonzero multiplier");
    expect_throw<UnderdeterminedNormalization>(out, "mirror-normalization", "classes orthogonal to F",
                                               [&] { normalize_mod_F(MirrorClasses{}, frame); });
    MirrorClasses bad = n.classes;
    bad.omega += CohClass::sigma() + CohClass::sigmabar();
    expect_throw<InconsistentNormalization>(out, "mirror-normalization", "non-normalizable classes",
                                            [&] { normalize_mod_F(bad, frame); });
    return out;
}

// ---------------------------------------------------------------------------

Records properties(const RunConfig& cfg) {
    Records out;
    const std::string p = "seed=" + std::to_string(cfg.seed) + " cases=" + std::to_string(cfg.property_cases);
    const std::vector<std::pair<std::string, PropertyResult (*)(std::uint64_t, int)>> suites{
        {"scalar ring axioms", check_scalar_ring},
        {"conj involution", check_conj_involution},
        {"wedge associativity", check_wedge_associativity},
        {"subspace round trips", check_subspace_round_trip},
        {"B-transform group action", check_btransform_action},
    };
    for (const auto& [label, fn] : suites) {
        const PropertyResult r = fn(cfg.seed, cfg.property_cases);
        expect_true(out, "properties", label + " " + p, r.ok() && r.cases == cfg.property_cases,
                    std::to_string(r.failures) + " failures; " + r.first_failure);
    }
    return out;
}

struct Suite {
    SuiteInfo info;
    std::function<Records(const RunConfig&)> run;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {{"phiOmega-table", "phi_HOmega: 1 -> -C-F, eta -> F, C -> 1+eta, F -> -eta"}, phi_omega_table},
        {{"phiOmega-isometry", "<phi x, phi y> = <x, y> for the Mukai pairing"}, phi_omega_isometry},
        {{"phiOmega-duality", "reverse transform o phi_HOmega = -Id on H^0 + <C, F> + H^4"}, phi_omega_duality},
        {{"contraction-table", "-|sigma: sigma^-1 -> 4, sigmabar -> sigma sigmabar, sigma^-1[C] -> C, sigma^-1[F] -> F"},
         contraction_table},
        {{"phiHT-table", "phi_HT = (-|sigma_Y)^-1 o phi_HOmega o (-|sigma_X)"}, phi_ht_table},
        {{"phiT-table", "phi_T = (1+eta) o phi_HT o (1-eta)"}, phi_t_table},
        {{"todd-rule", "-|sigma (x + eta -| x) = (1+eta) (-|sigma x)"}, todd_rule},
        {{"bfield-correction", "phi_T(u_t) - v_t = -(1/2t) sigmabar and phi_HT(u_t) = v_t"}, bfield_correction_suite},
        {{"bfield-decay", "-(1/2t) -> 0 along t = 10^k"}, bfield_decay},
        {{"kahler-class", "alpha = (1/t)C + ((t^2+1)/t)F: alpha.C = (t^2-1)/t, alpha.F = 1/t, alpha^2 = 2"},
         kahler_class},
        {{"period-identities", "(sigma + 2 zeta alpha - zeta^2 sigmabar)^2 = 0"}, period_identities},
        {{"spinor-exp-identity", "e^B e^{i omega} = 1 + (t sigma/2zeta - zeta t sigmabar/2) - t^2 sigma sigmabar/4"},
         spinor_exp_identity},
        {{"spinor-specializations", "t sigma + 2 zeta (1 - t^2 sigma sigmabar/4) - zeta^2 t sigmabar at zeta = 0, inf"},
         spinor_specializations},
        {{"jzeta-algebra", "J_zeta = ((1-|z|^2) J_I - 2 Im z J_wJ + 2 Re z J_wK)/(1+|z|^2)"}, jzeta_algebra},
        {{"jtheta-factorization", "J_zeta = e^{-B} J_omega e^{B}"}, jtheta_factorization},
        {{"spinor-structure-match", "Ann(family spinor) = +i eigenspace of J_zeta"}, spinor_structure_match},
        {{"direction-graph-X", "ker(sigma + 2 zeta omega_I - zeta^2 sigmabar) = graph of -2 zeta sigma^-1 omega_I"},
         direction_graph_x},
        {{"direction-graph-Y", "+i eigenspace of J_zeta = graph of (zeta/2)(-(1/t) sigma^-1 + t sigmabar)"},
         direction_graph_y},
        {{"direction-eigen-equations", "(I-type components of) J_zeta v = i v"}, direction_eigen_equations},
        {{"direction-lattice", "minus (-|sigma)^-1 of the zeta-linear part gives u_t and v_t"}, direction_lattice},
        {{"mirror-thm4", "sigma_zeta/(F.Re sigma_zeta) - C = t sigma/2zeta - zeta t sigmabar/2 mod F"}, mirror_thm4},
        {{"mirror-normalization", "Re^2 = Im^2 = omega^2, omega.Re = omega.Im = Re.Im = 0, B.F = 0"},
         mirror_normalization},
        {{"limits", "u_1, phi_T(u_1) = -sigma^-1/2, u_inf, v_inf = phi_T(u_inf) = sigmabar/2"}, limits},
        {{"properties", "randomized algebraic laws"}, properties},
    };
    return all;
}

bool selected(const RunConfig& cfg, const std::string& name) {
    if (cfg.filter.empty()) return true;
    return std::find(cfg.filter.begin(), cfg.filter.end(), name) != cfg.filter.end() ||
           std::find(cfg.filter.begin(), cfg.filter.end(), "all") != cfg.filter.end();
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

const std::vector<SuiteInfo>& registered_suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (const auto& s : suites()) out.push_back(s.info);
        return out;
    }();
    return infos;
}

void validate(const RunConfig& cfg) {
    if (cfg.t_grid.empty()) throw ConfigError("t grid is empty");
    if (cfg.zeta_grid.empty()) throw ConfigError("zeta grid is empty");
    for (const auto& t : cfg.t_grid)
        if (t <= 1) throw ConfigError("t sample " + t.get_str() + " is not in (1, inf)");
    if (cfg.property_cases <= 0) throw ConfigError("property_cases must be positive");
    if (!cfg.sampled && !cfg.symbolic) throw ConfigError("nothing to run: neither sampled nor symbolic");
    std::set<std::string> known;
    for (const auto& s : registered_suites()) known.insert(s.name);
    for (const auto& f : cfg.filter)
        if (f != "all" && !known.count(f)) throw ConfigError("unknown check '" + f + "'");
}

RunConfig load_config(const std::filesystem::path& path, RunConfig cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "t_grid") {
                cfg.t_grid.clear();
                for (const auto& item : split_list(value)) {
                    const GaussRational z = parse_constant(item);
                    if (!z.is_real()) throw ConfigError("t sample " + item + " is not real");
                    cfg.t_grid.push_back(z.re());
                }
            } else if (key == "zeta_grid") {
                cfg.zeta_grid.clear();
                for (const auto& item : split_list(value)) cfg.zeta_grid.push_back(parse_constant(item));
            } else if (key == "format") {
                if (value == "text") cfg.format = OutputFormat::Text;
                else if (value == "structured") cfg.format = OutputFormat::Structured;
                else throw ConfigError("unknown format '" + value + "'");
            } else if (key == "checks") {
                cfg.filter = split_list(value);
            } else if (key == "seed") {
                cfg.seed = std::stoull(value);
            } else if (key == "property_cases") {
                cfg.property_cases = std::stoi(value);
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ConfigError& e) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        } catch (const std::exception& e) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": bad value for '" + key + "': " + e.what());
        }
    }
    return cfg;
}

std::vector<CheckDescriptor> run_checks(const RunConfig& cfg) {
    validate(cfg);
    std::vector<std::pair<const Suite*, std::future<Records>>> jobs;
    for (const auto& s : suites()) {
        if (!selected(cfg, s.info.name)) continue;
        jobs.emplace_back(&s, std::async(std::launch::async, [&s, &cfg] {
                              try {
                                  return s.run(cfg);
                              } catch (const std::exception& e) {
                                  return Records{{s.info.name, "", "suite", false, std::string("error: ") + e.what()}};
                              }
                          }));
    }
    std::vector<CheckDescriptor> out;
    for (auto& [suite, fut] : jobs) {
        for (auto& rec : fut.get()) {
            rec.anchor = suite->info.anchor;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

bool all_pass(const std::vector<CheckDescriptor>& records) {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
}

std::string format_text(const std::vector<CheckDescriptor>& records) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : records) {
        os << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  [" << r.params << "]";
        if (!r.pass) {
            ++failed;
            os << "  residual: " << r.witness;
        }
        os << "\n";
    }
    os << records.size() << " checks, " << failed << " failed\n";
    return os.str();
}

std::string format_structured(const std::vector<CheckDescriptor>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["anchor"] = r.anchor;
        j["params"] = r.params;
        j["verdict"] = r.pass ? "pass" : "fail";
        j["witness"] = r.witness;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

} // namespace k3fm
