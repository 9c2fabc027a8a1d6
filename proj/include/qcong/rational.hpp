#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qcong {

using Integer = mpz_class;
/// Exact rational scalar. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "a" or "a/b", the form used in every report.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& base, long exponent);

Integer factorial(unsigned n);

/// Falling-factorial binomial alpha(alpha-1)...(alpha-k+1)/k!.
/// Returns 0 for k < 0; for integer 0 <= alpha < k the product has a zero
/// factor, so the ordinary convention binom(n, k) = 0 falls out.
Rational gen_binomial(const Rational& alpha, long k);

inline Rational gen_binomial(long n, long k) { return gen_binomial(Rational(n), k); }

}  // namespace qcong
