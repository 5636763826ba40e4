#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mcmd {

// Exact rational number. GMP keeps every value in canonical form (lowest
// terms, positive denominator) as long as it is built through the helpers
// below or through arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q". Throws Error(kBadRational) on anything else,
// including a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text: "3", "-1/2". Never emits a denominator of 1.
std::string format_rational(const Rational& value);

// Fixed-point decimal rendering with `digits` fractional digits, rounded
// half away from zero. Integer arithmetic only.
std::string format_decimal(const Rational& value, int digits);

// Largest multiple of 1/scale that is <= sqrt(value). value must be >= 0.
Rational sqrt_lower_bound(const Rational& value, const Integer& scale);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace mcmd
