#pragma once

#include <gmpxx.h>

#include <string>

namespace lintype {

// Exact rational arithmetic, always in lowest terms with positive
// denominator (maintained by GMP's canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

Rational rational_from_string(const std::string& text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational pow_rational(const Rational& base, unsigned long exponent);

// gcd of the set {a, b} inside Q: gcd of numerators over lcm of
// denominators.  gcd(0, b) = |b|.
Rational rational_content_gcd(const Rational& a, const Rational& b);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace lintype
