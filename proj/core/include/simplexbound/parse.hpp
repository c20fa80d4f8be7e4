#pragma once

// Expression grammar over exact integers:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' NAT)?
//   base   := NAT | VAR | '(' expr ')'
// '^' binds tighter than '*' binds tighter than '+'/'-'. Exponents must be
// bare nonnegative integer literals. No implicit multiplication. Variables
// are x1..xk, with x, y, z accepted as aliases of x1, x2, x3 when k <= 3.

#include <string>

#include "simplexbound/multipoly.hpp"

namespace simplexbound {

// Throws InputError with a 1-based position on malformed input.
MultiPoly parse_polynomial(const std::string& text, unsigned nvars);

// Canonical form: graded-lex descending terms over x1..xk; reparses to an
// equal polynomial.
std::string render_polynomial(const MultiPoly& P);

}  // namespace simplexbound
