#include "k3fm/mirror.hpp"

#include <vector>

#include "k3fm/errors.hpp"

namespace k3fm {

namespace {

std::array<const Scalar*, 6> slots(const CohClass& x) { return {&x.a, &x.cC, &x.cF, &x.cs, &x.csb, &x.b}; }

// Multiple k with x - k f reduced modulo f.
Scalar reduction_multiple(const CohClass& x, const CohClass& f) {
    const auto xs = slots(x);
    const auto fs = slots(f);
    for (std::size_t k = 0; k < fs.size(); ++k) {
        if (fs[k]->is_zero()) continue;
        if (!fs[k]->is_monomial()) throw NonUnitNormalizer("frame class has a non-unit leading coefficient");
        return *xs[k] / *fs[k];
    }
    throw DegeneratePeriod("cannot reduce modulo the zero class");
}

bool is_unit(const Scalar& s) { return s.is_monomial(); }

} // namespace

bool HyperbolicFrame::is_valid() const {
    return intersection(fclass, fclass).is_zero() && intersection(cclass, cclass) == Scalar(-2) &&
           intersection(fclass, cclass) == Scalar(1);
}

CohClass reduce_mod(const CohClass& x, const CohClass& f) { return x - reduction_multiple(x, f) * f; }

bool congruent_mod(const CohClass& x, const CohClass& y, const CohClass& f) { return reduce_mod(x - y, f).is_zero(); }

Scalar mirror_normalizer(const CohClass& period, const HyperbolicFrame& frame) {
    const Scalar n = intersection(frame.fclass, real_part(period));
    if (n.is_zero()) throw DegeneratePeriod("f . Re(sigma) vanishes");
    if (!is_unit(n)) throw NonUnitNormalizer("f . Re(sigma) = " + n.to_string() + " is not a unit");
    return n;
}

MirrorClasses mirror_classes(const MirrorTriple& tr, const HyperbolicFrame& frame) {
    if (!tr.period) throw MissingSlot("triple has no period");
    if (!tr.complexified_kahler) throw MissingSlot("triple has no complexified Kahler class");
    const CohClass& sigma = *tr.period;
    const Scalar n = mirror_normalizer(sigma, frame);
    const CohClass b = real_part(*tr.complexified_kahler);
    const CohClass omega = imag_part(*tr.complexified_kahler);
    return {
        real_part(sigma) / n - frame.cclass,
        imag_part(sigma) / n,
        (frame.cclass + b) / n,
        omega / n,
    };
}

MirrorTriple gross_mirror(const MirrorTriple& tr, const HyperbolicFrame& frame) {
    if (!tr.period) throw MissingSlot("triple has no period");
    const Scalar n = mirror_normalizer(*tr.period, frame);
    MirrorTriple out;
    out.complexified_kahler = reduce_mod(*tr.period / n - frame.cclass, frame.fclass);
    if (tr.complexified_kahler) {
        out.period = reduce_mod((frame.cclass + *tr.complexified_kahler) / n, frame.fclass);
    }
    return out;
}

std::array<Scalar, 6> normalization_constraints(const MirrorClasses& c, const HyperbolicFrame& frame) {
    const auto q = [](const CohClass& x, const CohClass& y) { return intersection(x, y); };
    return {
        q(c.re_sigma, c.re_sigma) - q(c.im_sigma, c.im_sigma),
        q(c.im_sigma, c.im_sigma) - q(c.omega, c.omega),
        q(c.omega, c.re_sigma),
        q(c.omega, c.im_sigma),
        q(c.re_sigma, c.im_sigma),
        q(c.b, frame.fclass),
    };
}

NormalizedClasses normalize_mod_F(const MirrorClasses& c, const HyperbolicFrame& frame) {
    const auto q = [](const CohClass& x, const CohClass& y) { return intersection(x, y); };
    const CohClass& f = frame.fclass;
    const CohClass &w = c.omega, &re = c.re_sigma, &im = c.im_sigma;
    const Scalar wf = q(w, f), rf = q(re, f), jf = q(im, f);
    const Scalar two(2);

    // Rows [coef(l_omega), coef(l_re), coef(l_im), constant], meaning coef . l + constant = 0.
    using Row = std::array<Scalar, 4>;
    std::vector<Row> rows{
        {0, two * rf, -two * jf, q(re, re) - q(im, im)},
        {-two * wf, 0, two * jf, q(im, im) - q(w, w)},
        {rf, wf, 0, q(w, re)},
        {jf, 0, wf, q(w, im)},
        {0, jf, rf, q(re, im)},
    };

    std::array<Scalar, 3> lambda;
    std::size_t next = 0;
    std::array<std::size_t, 3> pivot_row{};
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t pick = rows.size();
        bool nonzero_seen = false;
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            nonzero_seen = true;
            if (is_unit(rows[r][col])) {
                pick = r;
                break;
            }
        }
        if (pick == rows.size()) {
            if (nonzero_seen) throw NonUnitNormalizer("normalization pivot is not a unit");
            throw UnderdeterminedNormalization("normalization system is singular");
        }
        std::swap(rows[next], rows[pick]);
        const Scalar p = rows[next][col];
        for (auto& e : rows[next]) e = e / p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][col].is_zero()) continue;
            const Scalar factor = rows[r][col];
            for (std::size_t k = 0; k < 4; ++k) rows[r][k] -= factor * rows[next][k];
        }
        pivot_row[col] = next++;
    }
    for (std::size_t r = next; r < rows.size(); ++r) {
        if (!rows[r][3].is_zero()) {
            throw InconsistentNormalization("normalization constraints are inconsistent: residual " +
                                            rows[r][3].to_string());
        }
    }
    for (std::size_t col = 0; col < 3; ++col) lambda[col] = -rows[pivot_row[col]][3];

    const Scalar lambda_b = -reduction_multiple(c.b, f);
    NormalizedClasses out{
        {c.b + lambda_b * f, w + lambda[0] * f, re + lambda[1] * f, im + lambda[2] * f},
        {lambda_b, lambda[0], lambda[1], lambda[2]},
    };
    return out;
}

CohClass normalized_twistor_period(const Scalar& t, const Scalar& zeta) {
    return twistor_period(t, zeta) / (Scalar(2) * zeta);
}

CohClass gualtieri_kahler_class(const Scalar& t, const Scalar& zeta) {
    return t / (Scalar(2) * zeta) * CohClass::sigma() - zeta * t / Scalar(2) * CohClass::sigmabar();
}

MirrorIdentity verify_theorem4(const Scalar& t, const Scalar& zeta, const HyperbolicFrame& frame) {
    const CohClass period = normalized_twistor_period(t, zeta);
    const MirrorTriple mirror = gross_mirror({period, std::nullopt}, frame);
    const CohClass expected = gualtieri_kahler_class(t, zeta);
    const CohClass residual = reduce_mod(*mirror.complexified_kahler - expected, frame.fclass);
    return {residual.is_zero(), residual, mirror_normalizer(period, frame)};
}

} // namespace k3fm
