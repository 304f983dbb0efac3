#ifndef RFLAMP_POLY_TEXT_HPP
#define RFLAMP_POLY_TEXT_HPP

#include <string>
#include <string_view>

#include "rflamp/lamplighter.hpp"
#include "rflamp/laurent.hpp"

namespace rflamp {

// Polynomial text grammar (ASCII):
//   term  := [coeff]['t'['^' signed-int]]
//   poly  := ['-'] term (('+'|'-') term)*
// Whitespace is ignored. An omitted coefficient means 1; an omitted 't'
// means exponent 0. Canonical output: ascending exponents, '+'-separated,
// coefficients reduced into [1, p).

LaurentPoly parse_laurent(std::string_view text, Prime p);
/// rejects negative exponents
Poly parse_poly(std::string_view text, Prime p);

std::string format_poly(const Poly& f);
std::string format_laurent(const LaurentPoly& f);

// Group element text form: "(<laurent-poly>, <int>)".
LampElement parse_element(std::string_view text, Prime p);
std::string format_element(const LampElement& x);

}  // namespace rflamp

#endif
