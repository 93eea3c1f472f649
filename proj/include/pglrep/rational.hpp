#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pglrep {

// Exact rational; GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", with optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace pglrep
