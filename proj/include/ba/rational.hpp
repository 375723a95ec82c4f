#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ba::algebra {

// Canonical form (gcd 1, positive denominator) is maintained by gmp after
// every arithmetic operation; parse_rational canonicalizes its input.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
bool is_integer(const Rational& q);
long to_long(const Rational& q);  // requires is_integer and range

}  // namespace ba::algebra
