#ifndef HSTAR_PARSER_HPP
#define HSTAR_PARSER_HPP

#include <string>

#include "hstar/polynomial.hpp"

namespace hstar {

/// Parse polynomial text over the given ring. Grammar (whitespace ignored):
///   poly    := [sign] term { ('+' | '-') term }
///   term    := coeff [ '*' monomial ] | monomial
///   coeff   := integer [ '/' positive-integer ] | zeta-factor
///   monomial:= factor { '*' factor }
///   factor  := identifier [ '^' positive-integer ] | zeta-factor
///   zeta-factor := 'zeta' [ '^' positive-integer ]   (cyclotomic rings only)
/// Throws parse_error with a 1-based character position on bad input.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

/// Parse a scalar (a polynomial with no variables) into a field element.
FieldElement parse_field_element(const std::string& text, const FieldSpec& field);

/// Canonical text form. Terms appear in descending grevlex order; cyclotomic
/// coefficients are expanded into rational multiples of powers of zeta, so the
/// output re-parses to the same polynomial.
std::string to_string(const Polynomial& p);

std::string to_string(const FieldElement& c);

} // namespace hstar

#endif
