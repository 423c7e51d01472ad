#ifndef KNUTSON_POLY_IO_HPP
#define KNUTSON_POLY_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "knutson/polynomial.hpp"

namespace knutson {

// Parse polynomial text over Q in the variables x1..x<nvars>.
//
// Grammar (whitespace-insensitive):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ['^' uint]
//   primary:= uint ['/' uint] | variable | '(' expr ')'
//
// Multiplication must be written out ("2*x1", not "2x1").  Errors carry
// 1-based byte offsets into the input.  "0" parses to the zero polynomial;
// callers that need a nonzero polynomial enforce that themselves.
Polynomial<Rational> parse_polynomial(std::string_view text, std::size_t nvars,
                                      TermOrderPtr ord);

// Parse a ';'-separated list of polynomials (an ideal's generator list).
// Offsets in errors refer to the full input string.
std::vector<Polynomial<Rational>> parse_polynomial_list(std::string_view text,
                                                        std::size_t nvars,
                                                        TermOrderPtr ord);

} // namespace knutson

#endif
