#pragma once

#include <string_view>
#include <variant>

#include "k3fm/harmonic.hpp"

namespace k3fm {

/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := '-' factor | power
///   power   := primary ('^' int)?
///   primary := number | 'i' | 't' | 'zeta' | 'zetabar' | basis | '(' expr ')'
///   basis   := 'one' | 'C' | 'F' | 'sigma' | 'sigmabar' | 'eta'
///            | 'sigma^-1' | 'sigma^-1*C' | 'sigma^-1*F'
/// A product holds at most one basis symbol; divisors and bases of powers must
/// be scalars. Errors carry 1-based line and column.
Scalar parse_scalar(std::string_view src);

/// A constant scalar, e.g. "3/2" or "(1/2+1/3*i)". Throws SyntaxError on
/// anything depending on t or zeta.
GaussRational parse_constant(std::string_view src);

enum class ClassContext { Auto, Cohomology, Harmonic };

using ParsedClass = std::variant<CohClass, HTClass>;

/// Auto picks Harmonic iff a sigma^-1 symbol occurs. In the cohomology
/// context a bare scalar stands for scalar * one; in the harmonic context it
/// is rejected.
ParsedClass parse_class_expr(std::string_view src, ClassContext ctx = ClassContext::Auto);

} // namespace k3fm
