#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jung {

// Exact scalar of the coefficient field. mpq_class keeps values in lowest
// terms with a positive denominator once canonicalized; every Rational that
// leaves this library is canonical.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" (optional leading '-', decimal digits only).
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

// C(n, k) as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

// base^exponent for exponent >= 0.
Rational power(const Rational& base, unsigned long exponent);

}  // namespace jung
