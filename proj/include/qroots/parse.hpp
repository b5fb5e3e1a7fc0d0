#pragma once

#include <string>
#include <string_view>

#include "qroots/quaternion.hpp"
#include "qroots/std_poly.hpp"
#include "qroots/two_sided.hpp"

namespace qroots {

// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := signed (['*'] power)*        juxtaposition multiplies
//   signed  := ('+' | '-') signed | power
//   power   := primary ['^' integer]
//   primary := number | 'i' | 'j' | 'k' | 'z' | '(' expr ')'
// Adjacent units multiply by the Hamilton table, so "ij" reads as k.
// Errors are reported as SyntaxError with the byte offset.

// Polynomial in H[z] with z central; coefficients end up on the left.
StdPoly parse_std_poly(std::string_view text);

// Sum of left * z^power * right terms. Products must keep a single z-power
// block per term (constants may sit on either side of it).
TwoSidedPoly parse_two_sided(std::string_view text);

// A z-free expression.
Quaternion parse_quaternion(std::string_view text);

// "(c_n) z^n + ... + (c_0)"; parse_std_poly reads it back exactly.
std::string format_std_poly(const StdPoly& f);
// "(l) z^p (r) + ..."; parse_two_sided reads it back exactly.
std::string format_two_sided(const TwoSidedPoly& f);

} // namespace qroots
