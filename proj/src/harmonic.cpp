#include "k3fm/harmonic.hpp"

#include <array>
#include <utility>

#include "k3fm/errors.hpp"

namespace k3fm {

namespace {

template <typename Fn>
HTClass map_coeffs(const HTClass& x, Fn fn) {
    return {fn(x.p), fn(x.qC), fn(x.qF), fn(x.r)};
}

} // namespace

bool HTClass::is_zero() const { return p.is_zero() && qC.is_zero() && qF.is_zero() && r.is_zero(); }

HTClass HTClass::substitute(const Rational& t0, const GaussRational& z0) const {
    return map_coeffs(*this, [&](const Scalar& s) { return s.substitute(t0, z0); });
}

HTClass& HTClass::operator+=(const HTClass& o) {
    p += o.p;
    qC += o.qC;
    qF += o.qF;
    r += o.r;
    return *this;
}

HTClass& HTClass::operator-=(const HTClass& o) {
    p -= o.p;
    qC -= o.qC;
    qF -= o.qF;
    r -= o.r;
    return *this;
}

HTClass HTClass::operator-() const {
    return map_coeffs(*this, [](const Scalar& s) { return -s; });
}

HTClass operator*(const Scalar& s, const HTClass& x) {
    return map_coeffs(x, [&](const Scalar& c) { return s * c; });
}

HTClass operator/(const HTClass& x, const Scalar& s) {
    return map_coeffs(x, [&](const Scalar& c) { return c / s; });
}

std::string HTClass::to_string() const {
    const std::array<std::pair<const Scalar*, const char*>, 4> slots{{
        {&p, "sigma^-1"}, {&qC, "sigma^-1*C"}, {&qF, "sigma^-1*F"}, {&r, "sigmabar"},
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

std::ostream& operator<<(std::ostream& os, const HTClass& x) { return os << x.to_string(); }

CohClass contract_sigma(const HTClass& x) {
    return {Scalar(4) * x.p, x.qC, x.qF, 0, 0, Scalar(4) * x.r};
}

HTClass contract_sigma_inv(const CohClass& x) {
    if (!x.cs.is_zero() || !x.csb.is_zero()) {
        throw NotInImage("class " + x.to_string() + " has a sigma/sigmabar component");
    }
    return {x.a / Scalar(4), x.cC, x.cF, x.b / Scalar(4)};
}

CohClass phi_homega(const CohClass& x) {
    CohClass y;
    // 1 -> -C - F
    y.cC -= x.a;
    y.cF -= x.a;
    // eta -> F
    y.cF += x.b;
    // C -> 1 + eta
    y.a += x.cC;
    y.b += x.cC;
    // F -> -eta
    y.b -= x.cF;
    y.cs = x.cs;
    y.csb = x.csb;
    return y;
}

CohClass phi_homega_dual(const CohClass& x) { return phi_homega(x); }

HTClass phi_ht(const HTClass& x) { return contract_sigma_inv(phi_homega(contract_sigma(x))); }

HTClass todd_contract(const HTClass& x, int sign) {
    HTClass out = x;
    out.r += Scalar(sign >= 0 ? 1 : -1) * x.p;
    return out;
}

HTClass phi_t(const HTClass& x) { return todd_contract(phi_ht(todd_contract(x, -1)), +1); }

} // namespace k3fm
