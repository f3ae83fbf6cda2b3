#include "k3fm/properties.hpp"

#include <vector>

namespace k3fm {

Rational RandomSource::rational() {
    Rational q(integer(-9, 9), integer(1, 6));
    q.canonicalize();
    return q;
}

GaussRational RandomSource::gauss() { return {rational(), integer(0, 2) == 0 ? Rational(0) : rational()}; }

GaussRational RandomSource::nonzero_gauss() {
    GaussRational z;
    while (z.is_zero()) z = gauss();
    return z;
}

Scalar RandomSource::scalar() {
    Scalar s;
    const int n = integer(0, 4);
    for (int k = 0; k < n; ++k)
        s += Scalar::monomial(nonzero_gauss(), {integer(-2, 2), integer(-2, 2), integer(-2, 2)});
    return s;
}

Spinor RandomSource::spinor() {
    Spinor s;
    for (unsigned k = 0; k < Spinor::kSize; ++k)
        if (integer(0, 2) == 0) s[k] = gauss();
    return s;
}

CVector RandomSource::vector(std::size_t n) {
    CVector v(n);
    for (auto& x : v)
        if (integer(0, 3) != 0) x = gauss();
    return v;
}

CMatrix RandomSource::two_form() {
    CMatrix w(4, 4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) {
            w(a, b) = rational();
            w(b, a) = -w(a, b);
        }
    return w;
}

CMatrix RandomSource::invertible(std::size_t n) {
    CMatrix m = CMatrix::identity(n);
    for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
        CMatrix e = CMatrix::identity(n);
        const auto r = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
        const auto c = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
        if (r == c) {
            e(r, r) = nonzero_gauss();
        } else {
            e(r, c) = gauss();
        }
        m = e * m;
    }
    return m;
}

namespace {

template <typename Fn>
PropertyResult run_cases(std::uint64_t seed, int cases, Fn body) {
    RandomSource rnd(seed);
    PropertyResult result;
    for (int k = 0; k < cases; ++k) {
        ++result.cases;
        std::string failure = body(rnd);
        if (!failure.empty()) {
            if (result.failures++ == 0) result.first_failure = "case " + std::to_string(k) + ": " + failure;
        }
    }
    return result;
}

} // namespace

PropertyResult check_scalar_ring(std::uint64_t seed, int cases) {
    return run_cases(seed, cases, [](RandomSource& rnd) -> std::string {
        const Scalar a = rnd.scalar(), b = rnd.scalar(), c = rnd.scalar();
        if (!(a + b == b + a)) return "a + b != b + a for a = " + a.to_string() + ", b = " + b.to_string();
        if (!(a * b == b * a)) return "a b != b a for a = " + a.to_string() + ", b = " + b.to_string();
        if (!((a + b) + c == a + (b + c))) return "addition not associative";
        if (!((a * b) * c == a * (b * c))) return "multiplication not associative";
        if (!(a * (b + c) == a * b + a * c)) return "not distributive";
        if (!(a + Scalar(0) == a) || !(a * Scalar(1) == a)) return "identity fails";
        if (!(a - a).is_zero() || !(a + (-a)).is_zero()) return "additive inverse fails";
        return {};
    });
}

PropertyResult check_conj_involution(std::uint64_t seed, int cases) {
    return run_cases(seed, cases, [](RandomSource& rnd) -> std::string {
        const Scalar a = rnd.scalar(), b = rnd.scalar();
        if (!(a.conj().conj() == a)) return "conj(conj a) != a for a = " + a.to_string();
        if (!((a + b).conj() == a.conj() + b.conj())) return "conj not additive";
        if (!((a * b).conj() == a.conj() * b.conj())) return "conj not multiplicative";
        // Nonzero sample point: scalars may carry negative powers.
        const GaussRational z = rnd.nonzero_gauss();
        Rational t0(rnd.integer(1, 9), rnd.integer(1, 4));
        t0.canonicalize();
        if (!(a.conj().eval(t0, z) == a.eval(t0, z).conj())) return "conj does not commute with evaluation";
        return {};
    });
}

PropertyResult check_wedge_associativity(std::uint64_t seed, int cases) {
    return run_cases(seed, cases, [](RandomSource& rnd) -> std::string {
        const Spinor a = rnd.spinor(), b = rnd.spinor(), c = rnd.spinor();
        if (!(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)))) return "wedge not associative";
        const int p = rnd.integer(0, 4), q = rnd.integer(0, 4);
        const Spinor ap = a.part(p), bq = b.part(q);
        const Spinor swapped = ((p * q) % 2 ? GaussRational(-1) : GaussRational(1)) * wedge(bq, ap);
        if (!(wedge(ap, bq) == swapped)) return "graded commutativity fails";
        return {};
    });
}

PropertyResult check_subspace_round_trip(std::uint64_t seed, int cases) {
    return run_cases(seed, cases, [](RandomSource& rnd) -> std::string {
        const std::size_t n = static_cast<std::size_t>(rnd.integer(2, 6));
        const int count = rnd.integer(0, static_cast<int>(n) + 1);
        std::vector<CVector> vs;
        for (int k = 0; k < count; ++k) vs.push_back(rnd.vector(n));
        const Subspace l = Subspace::span(vs, n);
        if (!(Subspace::span(l.vectors(), n) == l)) return "span of canonical basis changed the subspace";
        for (const auto& v : vs)
            if (!l.contains(v)) return "subspace lost a spanning vector";
        const CMatrix g = rnd.invertible(n);
        if (!(l.transformed(g).transformed(inverse(g)) == l)) return "coordinate change did not round trip";
        const std::size_t k = static_cast<std::size_t>(rnd.integer(1, static_cast<int>(n) - 1));
        CMatrix a(n - k, k);
        for (std::size_t r = 0; r < n - k; ++r)
            for (std::size_t c = 0; c < k; ++c) a(r, c) = rnd.gauss();
        if (!(graph_extract(graph_of(a), k) == a)) return "graph_extract(graph_of(A)) != A";
        return {};
    });
}

PropertyResult check_btransform_action(std::uint64_t seed, int cases) {
    return run_cases(seed, cases, [](RandomSource& rnd) -> std::string {
        const GCStructure j = j_zeta(rnd.gauss(), Rational(rnd.integer(2, 9), rnd.integer(1, 2)));
        const CMatrix b1 = rnd.two_form(), b2 = rnd.two_form();
        const GCStructure lhs = b_transform(j, b1 + b2);
        if (!(lhs == b_transform(b_transform(j, b2), b1))) return "B-transform is not a group action";
        if (!lhs.squares_to_minus_identity() || !lhs.is_orthogonal()) return "B-transform broke J^2 = -1 or orthogonality";
        return {};
    });
}

} // namespace k3fm
