// One verdict line per acceptance criterion. Each criterion runs its suites on
// the default grids and re-asserts its headline identities directly.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "k3fm/checks.hpp"
#include "k3fm/families.hpp"
#include "k3fm/gcs.hpp"
#include "k3fm/mirror.hpp"
#include "k3fm/parser.hpp"
#include "k3fm/properties.hpp"
#include "k3fm/spinor.hpp"

using namespace k3fm;

namespace {

struct Criterion {
    std::string title;
    std::vector<std::string> suites;
    std::function<bool()> direct;
    /// Minimum number of records the suites must produce.
    std::size_t min_records = 1;
};

HTClass ht(std::string_view s) { return std::get<HTClass>(parse_class_expr(s, ClassContext::Harmonic)); }
CohClass coh(std::string_view s) { return std::get<CohClass>(parse_class_expr(s, ClassContext::Cohomology)); }

const Scalar T = Scalar::t();
const Scalar Z = Scalar::zeta();

bool phi_omega_direct() {
    const std::vector<CohClass> basis{CohClass::one(), CohClass::C(), CohClass::F(),
                                      CohClass::sigma(), CohClass::sigmabar(), CohClass::eta()};
    int pairs = 0;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            if (!(mukai_pairing(phi_homega(basis[a]), phi_homega(basis[b])) == mukai_pairing(basis[a], basis[b])))
                return false;
            ++pairs;
        }
    return pairs == 15 && phi_homega(coh("one")) == coh("-C - F") && phi_homega(coh("eta")) == coh("F") &&
           phi_homega(coh("C")) == coh("one + eta") && phi_homega(coh("F")) == coh("-eta");
}

bool contraction_direct() {
    return contract_sigma(ht("sigma^-1")) == coh("4*one") && contract_sigma(ht("sigmabar")) == coh("4*eta") &&
           contract_sigma(ht("sigma^-1*C")) == coh("C") && contract_sigma(ht("sigma^-1*F")) == coh("F");
}

bool phi_ht_direct() {
    return phi_ht(ht("1/4*sigma^-1")) == ht("-sigma^-1*C - sigma^-1*F") &&
           phi_ht(ht("1/4*sigmabar")) == ht("sigma^-1*F") &&
           phi_ht(ht("sigma^-1*C")) == ht("1/4*sigma^-1 + 1/4*sigmabar") &&
           phi_ht(ht("sigma^-1*F")) == ht("-1/4*sigmabar");
}

bool phi_t_direct() {
    return phi_t(ht("1/4*sigma^-1")) == ht("-sigma^-1*C - 2*sigma^-1*F") &&
           phi_t(ht("1/4*sigmabar")) == ht("sigma^-1*F") &&
           phi_t(ht("sigma^-1*C")) == ht("1/4*sigma^-1 + 2/4*sigmabar") &&
           phi_t(ht("sigma^-1*F")) == ht("-1/4*sigmabar");
}

bool correction_direct() {
    const auto decay = correction_decay(6);
    return phi_t(direction_X(T)) - direction_Y(T) == ht("-1/(2*t)*sigmabar") &&
           phi_ht(direction_X(T)) == direction_Y(T) && is_strictly_shrinking(decay) &&
           decay.back() == GaussRational(Rational(-1, 2000000));
}

bool kahler_direct() {
    const CohClass a = alpha_class(T);
    return intersection(a, CohClass::C()) == (T * T - Scalar(1)) / T &&
           intersection(a, CohClass::F()) == Scalar(1) / T && intersection(a, a) == Scalar(2) &&
           intersection(alpha_class(Scalar(1)), CohClass::C()).is_zero();
}

bool period_direct() {
    const CohClass p = twistor_period(T, Z);
    const CohClass lcs = CohClass::sigma() + Scalar(2) * Z * CohClass::F();
    return intersection(p, p).is_zero() && intersection(lcs, lcs).is_zero();
}

bool spinor_direct() {
    int samples = 0;
    for (const auto& z : default_zeta_grid()) {
        if (z.is_zero()) continue;
        for (const Rational& t : default_t_grid()) {
            const auto [b, w] = bfield_symplectic_data(z, t);
            const Spinor e = wedge(exp_two_form(b), exp_two_form(GaussRational::i() * w));
            if (!((2 * z) * e == family_spinor(z, t))) return false;
            ++samples;
        }
    }
    return samples >= 20 && equal_up_to_scale(family_spinor(0, 2), sigma_spinor()) &&
           equal_up_to_scale(family_spinor_infinity(2), sigmabar_spinor());
}

bool jzeta_direct() {
    for (const auto& z : default_zeta_grid())
        for (const Rational& t : default_t_grid()) {
            const GCStructure j = j_zeta(z, t);
            if (!j.squares_to_minus_identity() || !j.is_orthogonal()) return false;
            if (z.norm() == 1 && !(j.block_TT().is_zero() && spherical_point(z).cos_theta == 0)) return false;
            if (!z.is_zero()) {
                const TwistedSymplectic d = spherical_bfield_data(z, t);
                if (!(b_transform(j_symplectic(d.omega), d.b) == j)) return false;
            }
        }
    return true;
}

bool structure_match_direct() {
    for (const auto& z : default_zeta_grid())
        for (const Rational& t : default_t_grid())
            if (!(clifford_annihilator(family_spinor(z, t)) == eigenspace_i(j_zeta(z, t).matrix()))) return false;
    return true;
}

bool directions_direct() {
    for (const auto& z : default_zeta_grid())
        for (const Rational& t : default_t_grid()) {
            if (!(twistor_pointwise_graph(z, t) == twistor_graph_closed_form(z))) return false;
            if (!(deformation_graph_Y(z, t) == deformation_graph_Y_closed_form(z, t))) return false;
        }
    return direction_from_spinor_family(SpinorFamily::XTwistor, T) == direction_X(T) &&
           direction_from_spinor_family(SpinorFamily::YGualtieri, T) == direction_Y(T);
}

bool mirror_direct() {
    const MirrorTriple m = gross_mirror({normalized_twistor_period(T, Z), std::nullopt}, HyperbolicFrame::standard());
    const CohClass expected = (T / (Scalar(2) * Z)) * CohClass::sigma() - (Z * T / Scalar(2)) * CohClass::sigmabar();
    return m.complexified_kahler && congruent_mod(*m.complexified_kahler, expected, CohClass::F()) &&
           mirror_normalizer(normalized_twistor_period(T, Z), HyperbolicFrame::standard()) == Scalar(1) / T;
}

bool limits_direct() {
    return u_one() == ht("-2*sigma^-1*C - 4*sigma^-1*F") && phi_t(u_one()) == ht("-1/2*sigma^-1") &&
           v_inf() == ht("1/2*sigmabar") && phi_t(u_inf()) == v_inf();
}

bool properties_direct() {
    const std::uint64_t seed = RunConfig{}.seed;
    for (auto fn : {check_scalar_ring, check_conj_involution, check_wedge_associativity, check_subspace_round_trip,
                    check_btransform_action}) {
        const PropertyResult r = fn(seed, 1000);
        if (r.cases != 1000 || !r.ok()) return false;
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"phi_HOmega table and Mukai isometry", {"phiOmega-table", "phiOmega-isometry", "phiOmega-duality"},
         phi_omega_direct, 25},
        {"contraction table", {"contraction-table"}, contraction_direct, 4},
        {"phi_HT as the composed square", {"phiHT-table"}, phi_ht_direct, 4},
        {"phi_T as the Todd-twisted phi_HT", {"phiT-table", "todd-rule"}, phi_t_direct, 4},
        {"B-field correction and its decay", {"bfield-correction", "bfield-decay"}, correction_direct},
        {"Kahler-class arithmetic", {"kahler-class"}, kahler_direct},
        {"period identities", {"period-identities"}, period_direct},
        {"spinor exponential identity and specializations", {"spinor-exp-identity", "spinor-specializations"},
         spinor_direct, 20},
        {"J_zeta algebra and B-field factorization", {"jzeta-algebra", "jtheta-factorization"}, jzeta_direct},
        {"spinor annihilator equals J_zeta eigenspace", {"spinor-structure-match"}, structure_match_direct, 100},
        {"deformation directions",
         {"direction-graph-X", "direction-graph-Y", "direction-eigen-equations", "direction-lattice"},
         directions_direct},
        {"mirror identity and normalization", {"mirror-thm4", "mirror-normalization"}, mirror_direct},
        {"limits", {"limits"}, limits_direct, 5},
        {"property suites", {"properties"}, properties_direct, 5},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const Criterion& c = criteria[k];
        RunConfig cfg;
        cfg.filter = c.suites;
        std::string note;
        bool ok = false;
        try {
            const auto records = run_checks(cfg);
            const bool suites_ok = all_pass(records) && records.size() >= c.min_records;
            const bool direct_ok = c.direct();
            ok = suites_ok && direct_ok;
            note = std::to_string(records.size()) + " records";
            if (!suites_ok) note += ", suite failure";
            if (!direct_ok) note += ", direct check failure";
        } catch (const std::exception& e) {
            note = std::string("error: ") + e.what();
        }
        if (!ok) ++failed;
        std::cout << "criterion " << (k + 1) << " [" << (ok ? "PASS" : "FAIL") << "] " << c.title << " (" << note
                  << ")\n";
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
