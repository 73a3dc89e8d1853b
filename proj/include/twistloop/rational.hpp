#pragma once

#include <gmpxx.h>

#include <string>

namespace twistloop {

/// Exact rational numbers. GMP's mpq_class keeps values in lowest terms with a
/// positive denominator, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "a/b" or "a" (arbitrary precision, optional sign).
Rational rational_from_string(const std::string& text);

/// Renders as "a/b", or "a" when the denominator is 1.
std::string rational_to_string(const Rational& r);

Integer binomial(long n, long k);

} // namespace twistloop
