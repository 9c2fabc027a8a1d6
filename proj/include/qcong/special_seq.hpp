#pragma once

#include <span>
#include <vector>

#include "qcong/poly.hpp"
#include "qcong/rational.hpp"

namespace qcong {

/// B_n from x/(e^x - 1); B_1 = -1/2.
Rational bernoulli(long n);
/// Bernoulli numbers of the second kind b_n from x/ln(1+x).
Rational bernoulli2(long n);
/// Signed Stirling numbers of the first kind: prod_{j<n}(x - j) = sum s(n,k) x^k.
/// Throws std::out_of_range unless 0 <= k <= n.
Integer stirling1(long n, long k);

struct DegenBernoulli {
  long n;
  Poly value;  // polynomial in lambda
};

/// beta_n(lambda) from x/((1 + lambda x)^(1/lambda) - 1), expanded with
/// (1 + lambda x)^(1/lambda) = exp(ln(1 + lambda x)/lambda).
DegenBernoulli degen_bernoulli(long n);

struct KValue {
  long n;
  long p;
  Rational value;
};

/// K_n(p) read off p w/((1+w)^p - 1) = sum (-1)^(n-1) K_n(p) w^n.
Rational k_gf(long n, long p);
/// K_n(p) from b_n, B_2j and s(n-1, 2j-1); defined for n >= 2.
Rational k_bernoulli_stirling(long n, long p);
/// K_n(p) = (-1)^(n-1)/n! p^n beta_n(1/p).
Rational k_via_degen(long n, long p);

/// K_0(p) .. K_max_n(p).
std::vector<KValue> k_table(long p, long max_n);

/// K_n as a polynomial in P = p^2, interpolated through the given primes.
/// With more than floor(n/2)+1 nodes the fit is over-determined, so a
/// degree above floor(n/2) exposes a mismatch.
Poly k_interpolated_in_p2(long n, std::span<const long> nodes);

}  // namespace qcong
