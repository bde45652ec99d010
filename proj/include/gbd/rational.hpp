#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gbd {

// Exact coefficients. mpq_class values are kept canonical (reduced, positive
// denominator) by every constructor path used in this library.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "[+-]p" or "[+-]p/q" with decimal digits only.
// Throws InvalidArgument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace gbd
