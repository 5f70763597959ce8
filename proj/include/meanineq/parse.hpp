#ifndef MEANINEQ_PARSE_HPP
#define MEANINEQ_PARSE_HPP

#include "meanineq/radical.hpp"

#include <string>

namespace meanineq::algebra {

// Plain-text expression grammar used by certificate files:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := integer | 't' | 'R1' | 'R2' | '(' expr ')'
// Whitespace is ignored. Throws ParseError with the offending offset.
RadicalExpr parse_radical(const std::string& text);

// Same grammar with R1/R2 rejected.
Poly parse_poly(const std::string& text);

} // namespace meanineq::algebra

#endif
