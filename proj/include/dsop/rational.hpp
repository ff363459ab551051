#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dsop {

/// Exact rational number. gmpxx keeps the value canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Decimal points, exponents and whitespace are
/// rejected. Throws ValidationError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p" form; parse_rational(to_string(r)) == r.
std::string to_string(const Rational& r);

/// Nearest double. Saturates to +-inf for magnitudes beyond double range.
double to_double(const Rational& r);

/// log|r| for r != 0; finite for any magnitude.
double log_abs(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

Integer factorial(unsigned long n);

/// i! / (i-k)!, zero when k > i.
Integer falling_factorial(unsigned long i, unsigned long k);

/// Rational power with nonnegative integer exponent.
Rational pow(const Rational& base, unsigned long e);

}  // namespace dsop
