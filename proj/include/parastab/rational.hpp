#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parastab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws ValidationError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when q = 1).
std::string to_string(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);

}  // namespace parastab
