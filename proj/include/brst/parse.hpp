#pragma once

#include "brst/poly.hpp"

#include <string_view>

namespace brst {

// Grammar (whitespace ignored):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*      divisor must be a nonzero constant
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
// The identifier I is the imaginary unit. Juxtaposition such as "2q" is a
// syntax error. Throws ParseError (with position) or ContextError.
Poly parse_polynomial(std::string_view src, const ContextPtr& ctx);

} // namespace brst
