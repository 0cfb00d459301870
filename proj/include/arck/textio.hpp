#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "arck/polyring.hpp"

namespace arck {

// Position of the first character of a parsed fragment, used to place
// diagnostics inside a larger file.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

// Parses the session polynomial grammar: signed terms, `int` or `int/int`
// coefficients, `var(^int)?` factors joined by an optional `*`, and
// parenthesized subexpressions with optional `^int`. Adjacent variable names
// may be run together (`xy` is x*y when x and y are variables).
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring, SourcePos at = {});

std::string format_monomial(const Monomial& m, const PolyRing& ring);
// Canonical text, re-parseable by parse_polynomial.
std::string format_polynomial(const Polynomial& f);

}  // namespace arck
