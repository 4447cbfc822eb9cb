#pragma once

#include <string_view>

#include "crclass/rational_expr.hpp"
#include "crclass/variables.hpp"

namespace crclass {

/// Parses an infix expression over the intrinsic coordinates of shape (n, c).
///
/// Grammar, loosest to tightest:
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('-' | '+') unary | power
///     power   := primary ('^' integer)?
///     primary := integer | identifier | '(' expr ')'
///
/// Identifiers are z1..z<n>, zb1..zb<n>, u1..u<c> and the imaginary unit I.
/// When n == 1 (resp. c == 1) the unindexed z, zb (resp. u) are accepted too.
/// Rational literals are written p/q and parse as a division.
///
/// Throws ParseError (syntax, unknown variable, exponent overflow).
RationalExpr parse_expr(std::string_view text, int n, int c);
inline RationalExpr parse_expr(std::string_view text, Shape shape) { return parse_expr(text, shape.n, shape.c); }

/// Parses a variable-free expression, e.g. "1/2 - 3*I".
GaussianRational parse_number(std::string_view text);

/// Largest exponent accepted after '^'.
inline constexpr unsigned kMaxExponent = 1000;

}  // namespace crclass
