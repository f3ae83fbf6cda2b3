#include <doctest.h>

#include <string>

#include "k3fm/errors.hpp"
#include "k3fm/parser.hpp"

using namespace k3fm;

namespace {

const Scalar t = Scalar::t();

std::string syntax_message(std::string_view src, ClassContext ctx = ClassContext::Auto) {
    try {
        parse_class_expr(src, ctx);
    } catch (const SyntaxError& e) {
        return e.what();
    }
    return "no error";
}

} // namespace

TEST_CASE("scalars") {
    CHECK(parse_scalar("t + t^-1") == t + t.pow(-1));
    CHECK(parse_scalar("(t^2+1)/t") == t + t.pow(-1));
    CHECK(parse_scalar("-3/4*i*zeta*zetabar") ==
          Scalar(GaussRational(0, Rational(-3, 4))) * Scalar::zeta() * Scalar::zetabar());
    CHECK(parse_scalar("2^-2") == Scalar(Rational(1, 4)));
    CHECK(parse_constant("(1/2+1/3*i)") == GaussRational(Rational(1, 2), Rational(1, 3)));
    CHECK(parse_constant("(3+4*i)/5") == GaussRational(Rational(3, 5), Rational(4, 5)));
    CHECK_THROWS_AS(parse_constant("t"), SyntaxError);
    CHECK_THROWS_AS(parse_scalar("1/(1+t)"), SyntaxError);
}

TEST_CASE("printed scalars parse back") {
    for (const Scalar& s : {t + t.pow(-1), Scalar(-2) * t - Scalar(2) * t.pow(-1),
                            Scalar(GaussRational(Rational(1, 2), Rational(-1, 3))) * Scalar::zeta().pow(-2),
                            Scalar::i() * Scalar::zetabar(), Scalar(0)}) {
        CHECK(parse_scalar(s.to_string()) == s);
    }
}

TEST_CASE("cohomology classes") {
    const auto x = parse_class_expr("(1/t)*C + ((t^2+1)/t)*F");
    REQUIRE(std::holds_alternative<CohClass>(x));
    CHECK(std::get<CohClass>(x) == alpha_class(t));
    CHECK(std::get<CohClass>(parse_class_expr("one - eta")) == todd_half(-1));
    CHECK(std::get<CohClass>(parse_class_expr("3", ClassContext::Cohomology)) == Scalar(3) * CohClass::one());
    CHECK(std::get<CohClass>(parse_class_expr("sigma/(2*zeta)")) ==
          (Scalar(1) / (Scalar(2) * Scalar::zeta())) * CohClass::sigma());
}

TEST_CASE("harmonic classes") {
    const auto x = parse_class_expr("sigma^-1", ClassContext::Harmonic);
    REQUIRE(std::holds_alternative<HTClass>(x));
    CHECK(std::get<HTClass>(x) == HTClass{1, 0, 0, 0});
    CHECK(std::holds_alternative<HTClass>(parse_class_expr("sigma^-1*C - sigmabar")));
    CHECK(std::get<HTClass>(parse_class_expr("1/4*sigma^-1 + 2/4*sigmabar")) ==
          HTClass{Rational(1, 4), 0, 0, Rational(1, 2)});
    CHECK(std::get<HTClass>(parse_class_expr("-2*sigma^-1*F")) == HTClass{0, 0, -2, 0});
    CHECK_THROWS_AS(parse_class_expr("C", ClassContext::Harmonic), SyntaxError);
    CHECK_THROWS_AS(parse_class_expr("3", ClassContext::Harmonic), SyntaxError);
}

TEST_CASE("printed classes parse back") {
    const CohClass c = alpha_class(t) + Scalar::i() * CohClass::sigma() - CohClass::eta();
    CHECK(std::get<CohClass>(parse_class_expr(c.to_string(), ClassContext::Cohomology)) == c);
    const HTClass h{t.pow(-1), Scalar(-2), Scalar::zeta(), Rational(1, 2)};
    CHECK(std::get<HTClass>(parse_class_expr(h.to_string(), ClassContext::Harmonic)) == h);
}

TEST_CASE("positioned errors") {
    CHECK(syntax_message("C + + F") == "unexpected '+' at 1:5");
    CHECK(syntax_message("C*F").find("product of two basis classes") != std::string::npos);
    CHECK(syntax_message("1/C").find("division by a class") != std::string::npos);
    CHECK(syntax_message("(C + F").find("expected ')'") != std::string::npos);
    CHECK(syntax_message("C +").find("unexpected end of input") != std::string::npos);
    CHECK(syntax_message("C^2").find("power of a class") != std::string::npos);
    CHECK(syntax_message("C\n + + F") == "unexpected '+' at 2:4");
    CHECK_THROWS_WITH_AS(parse_class_expr("2*x"), "unknown symbol 'x' at 1:3", UnknownSymbol);
}
