#include "k3fm/families.hpp"

#include <algorithm>
#include <limits>

namespace k3fm {

HTClass direction_X(const Scalar& t) { return -(Scalar(2) * contract_sigma_inv(alpha_class(t))); }

HTClass direction_Y(const Scalar& t) {
    return {Scalar(-1) / (Scalar(2) * t), 0, 0, t / Scalar(2)};
}

HTClass bfield_correction(const Scalar& t) { return phi_t(direction_X(t)) - direction_Y(t); }

HTClass untwisted_correction(const Scalar& t) { return phi_ht(direction_X(t)) - direction_Y(t); }

HTClass direction_from_class(const CohClass& family) { return -contract_sigma_inv(zeta_coefficient(family, 1)); }

HTClass direction_from_spinor_family(SpinorFamily family, const Scalar& t) {
    const Scalar zeta = Scalar::zeta();
    return direction_from_class(family == SpinorFamily::XTwistor ? twistor_period(t, zeta)
                                                                 : gualtieri_spinor_class(t, zeta));
}

bool FamilyReport::all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.second; });
}

FamilyReport kahler_checks(const Scalar& t) {
    const CohClass alpha = alpha_class(t);
    FamilyReport report;
    report.tag = t.to_string();
    report.u = direction_X(t);
    report.v = direction_Y(t);
    report.correction = bfield_correction(t);
    auto& out = report.verdicts;
    out.emplace_back("alpha.C = (t^2-1)/t", intersection(alpha, CohClass::C()) == (t * t - Scalar(1)) / t);
    out.emplace_back("alpha.F = 1/t", intersection(alpha, CohClass::F()) == Scalar(1) / t);
    out.emplace_back("alpha^2 = 2", intersection(alpha, alpha) == Scalar(2));
    out.emplace_back("alpha.C = 0 at t = 1", intersection(alpha_class(Scalar(1)), CohClass::C()).is_zero());
    out.emplace_back("phi_T(u) - v = -(1/2t) sigmabar",
                     report.correction == HTClass{0, 0, 0, Scalar(-1) / (Scalar(2) * t)});
    out.emplace_back("phi_HT(u) - v = 0", untwisted_correction(t).is_zero());
    return report;
}

HTClass leading_in_t(const HTClass& x) {
    int top = std::numeric_limits<int>::min();
    for (const Scalar* s : {&x.p, &x.qC, &x.qF, &x.r})
        if (!s->is_zero()) top = std::max(top, s->max_exponent(Var::T));
    if (top == std::numeric_limits<int>::min()) return {};
    auto lead = [top](const Scalar& s) {
        Scalar out;
        for (const auto& [e, c] : s.terms())
            if (e[0] == top) out += Scalar::monomial(c, {0, e[1], e[2]});
        return out;
    };
    return {lead(x.p), lead(x.qC), lead(x.qF), lead(x.r)};
}

HTClass u_one() { return direction_X(Scalar(1)); }

HTClass u_inf() { return leading_in_t(direction_X(Scalar::t())); }

HTClass v_inf() { return leading_in_t(direction_Y(Scalar::t())); }

std::vector<GaussRational> correction_decay(int k_max) {
    std::vector<GaussRational> out;
    const Scalar r = bfield_correction(Scalar::t()).r;
    mpz_class power = 1;
    for (int k = 1; k <= k_max; ++k) {
        power *= 10;
        out.push_back(r.eval(Rational(power), 0));
    }
    return out;
}

bool is_strictly_shrinking(const std::vector<GaussRational>& values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k].is_zero()) return false;
        if (k > 0 && !(values[k].norm() < values[k - 1].norm())) return false;
    }
    return true;
}

} // namespace k3fm
