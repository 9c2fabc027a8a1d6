#pragma once

#include "qcong/poly.hpp"
#include "qcong/rational.hpp"

namespace qcong {

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
Poly qint(long n);

/// Gaussian binomial [n choose k]_q as a polynomial in q; zero outside
/// 0 <= k <= n. Built by the Pascal rule and memoized per thread.
Poly q_binomial(long n, long k);

/// Chebyshev polynomial of the first kind: T_0 = 1, T_1 = x,
/// T_(n+1) = 2x T_n - T_(n-1).
Poly chebyshev_t(long n);

/// Kummer's expansion of a^n + b^n in powers of ab and a+b, evaluated at
/// the given point.
Rational kummer_sum(long n, const Rational& a, const Rational& b);

/// Checks, as an identity of Laurent polynomials in z, that
///   2 z^(-p/2) T_p(sqrt(z)(3-z)/2)
///     = sum_k (-1)^k p/(p-k) binom(p-k,k) z^(-k) (3-z)^(p-2k).
/// Both sides are evaluated at rational squares z = u^2, enough of them to
/// exceed the degree of the cleared polynomial, so agreement is a proof.
bool chebyshev_expansion_check(long p);

}  // namespace qcong
