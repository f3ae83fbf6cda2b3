#include "k3fm/cohomology.hpp"

#include <array>
#include <utility>

namespace k3fm {

namespace {

template <typename Fn>
CohClass map_coeffs(const CohClass& x, Fn fn) {
    return {fn(x.a), fn(x.cC), fn(x.cF), fn(x.cs), fn(x.csb), fn(x.b)};
}

} // namespace

bool CohClass::is_zero() const {
    return a.is_zero() && cC.is_zero() && cF.is_zero() && cs.is_zero() && csb.is_zero() && b.is_zero();
}

CohClass CohClass::conj() const {
    return {a.conj(), cC.conj(), cF.conj(), csb.conj(), cs.conj(), b.conj()};
}

CohClass CohClass::substitute(const Rational& t0, const GaussRational& z0) const {
    return map_coeffs(*this, [&](const Scalar& s) { return s.substitute(t0, z0); });
}

CohClass& CohClass::operator+=(const CohClass& o) {
    a += o.a;
    cC += o.cC;
    cF += o.cF;
    cs += o.cs;
    csb += o.csb;
    b += o.b;
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
    a -= o.a;
    cC -= o.cC;
    cF -= o.cF;
    cs -= o.cs;
    csb -= o.csb;
    b -= o.b;
    return *this;
}

CohClass CohClass::operator-() const {
    return map_coeffs(*this, [](const Scalar& s) { return -s; });
}

CohClass operator*(const Scalar& s, const CohClass& x) {
    return map_coeffs(x, [&](const Scalar& c) { return s * c; });
}

CohClass operator/(const CohClass& x, const Scalar& s) {
    return map_coeffs(x, [&](const Scalar& c) { return c / s; });
}

std::string CohClass::to_string() const {
    const std::array<std::pair<const Scalar*, const char*>, 6> slots{{
        {&a, "one"}, {&cC, "C"}, {&cF, "F"}, {&cs, "sigma"}, {&csb, "sigmabar"}, {&b, "eta"},
    }};
    std::string out;
    for (const auto& [coef, name] : slots) {
        if (coef->is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (*coef == Scalar(1)) {
            out += name;
        } else {
            out += "(" + coef->to_string() + ")*" + name;
        }
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CohClass& x) { return os << x.to_string(); }

Scalar intersection(const CohClass& x, const CohClass& y) {
    Scalar q = Scalar(-2) * x.cC * y.cC;
    q += x.cC * y.cF + x.cF * y.cC;
    q += Scalar(4) * (x.cs * y.csb + x.csb * y.cs);
    return q;
}

CohClass wedge(const CohClass& x, const CohClass& y) {
    CohClass out;
    out.a = x.a * y.a;
    out.cC = x.a * y.cC + y.a * x.cC;
    out.cF = x.a * y.cF + y.a * x.cF;
    out.cs = x.a * y.cs + y.a * x.cs;
    out.csb = x.a * y.csb + y.a * x.csb;
    out.b = x.a * y.b + y.a * x.b + intersection(x, y);
    return out;
}

Scalar mukai_pairing(const CohClass& x, const CohClass& y) {
    return intersection(x, y) - x.a * y.b - y.a * x.b;
}

CohClass real_part(const CohClass& x) {
    return (x + x.conj()) / Scalar(2);
}

CohClass imag_part(const CohClass& x) {
    return (x - x.conj()) / Scalar(GaussRational(0, 2));
}

CohClass todd_half(int sign) {
    return CohClass::one() + Scalar(sign >= 0 ? 1 : -1) * CohClass::eta();
}

CohClass alpha_class(const Scalar& t) {
    const Scalar t2p1 = t * t + Scalar(1);
    return Scalar(1) / t * CohClass::C() + t2p1 / t * CohClass::F();
}

CohClass twistor_period(const Scalar& t, const Scalar& zeta) {
    return CohClass::sigma() + Scalar(2) * zeta * alpha_class(t) - zeta * zeta * CohClass::sigmabar();
}

CohClass gualtieri_spinor_class(const Scalar& t, const Scalar& zeta) {
    // (1/t) 1 - (1/4) t sigma sigmabar, with sigma sigmabar = 4 eta.
    const CohClass middle = Scalar(1) / t * CohClass::one() - t * CohClass::eta();
    return CohClass::sigma() + Scalar(2) * zeta * middle - zeta * zeta * CohClass::sigmabar();
}

CohClass zeta_coefficient(const CohClass& x, int k) {
    return map_coeffs(x, [k](const Scalar& s) {
        Scalar out;
        for (const auto& [e, c] : s.terms()) {
            if (e[1] == k) out += Scalar::monomial(c, {e[0], 0, e[2]});
        }
        return out;
    });
}

} // namespace k3fm
