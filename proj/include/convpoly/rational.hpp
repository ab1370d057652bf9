#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace convpoly {

// GMP keeps mpq_class in lowest terms with a positive denominator after
// every arithmetic operation, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// x(x-1)...(x-k+1)
Rational falling(const Rational& x, unsigned k);
/// x(x+1)...(x+k-1)
Rational rising(const Rational& x, unsigned k);
/// Generalized binomial coefficient x^{falling k} / k!.
Rational binomial(const Rational& x, unsigned k);

Rational pow(const Rational& base, long exponent);

/// Natural log of |r| without overflowing on huge numerators or denominators.
double log_abs(const Rational& r);

/// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double v);

}  // namespace convpoly
