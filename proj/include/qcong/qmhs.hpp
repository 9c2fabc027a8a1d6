#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qcong/cyclo.hpp"
#include "qcong/ratfunc.hpp"

namespace qcong {

/// Exponent vector s with twist vector t; term j is q^(t_j k_j)/[k_j]_q^(s_j).
struct IndexSpec {
  std::vector<long> s;
  std::vector<long> t;

  /// Twist t_j = s_j - 1.
  static IndexSpec with_default_twist(std::vector<long> s);
  /// Throws std::invalid_argument on length mismatch or s_j < 1 or t_j < 0.
  static IndexSpec make(std::vector<long> s, std::vector<long> t);

  long depth() const { return static_cast<long>(s.size()); }
  long weight() const;
  std::string to_string() const;
  friend bool operator==(const IndexSpec&, const IndexSpec&) = default;
};

/// Chain j_1, ..., j_w of q^j/[j]_q terms; link i (1-based, between j_i and
/// j_(i+1)) is strict iff i is in the strict set.
struct MixedSpec {
  long w = 0;
  std::vector<long> strict;  // sorted subset of {1, ..., w-1}

  /// w = sum s, strict set = proper partial sums of s.
  static MixedSpec from_composition(const std::vector<long>& s);
  bool is_strict(long link) const;
};

/// General chain: exponents, twists and one strictness flag per link.
struct Chain {
  std::vector<long> s;
  std::vector<long> t;
  std::vector<bool> strict;  // size = length - 1

  static Chain strict_chain(const IndexSpec& spec);
  static Chain nonstrict_chain(const IndexSpec& spec);
  static Chain mixed_chain(const MixedSpec& m);
  long length() const { return static_cast<long>(s.size()); }
};

/// Scalars of Q(q) with the sum terms.
struct RatFuncRing {
  using Scalar = RatFunc;
  Scalar zero() const { return RatFunc(); }
  Scalar one() const { return RatFunc(1); }
  Scalar term(long k, long s, long t) const;
};

/// Scalars of Q[q]/[p]_q with the sum terms; every [k]_q inverse is cached
/// in the modulus.
struct CycloRing {
  ModulusPtr m;
  using Scalar = CycloElement;
  Scalar zero() const { return CycloElement(m, Rational(0)); }
  Scalar one() const { return CycloElement(m, Rational(1)); }
  Scalar term(long k, long s, long t) const;
};

/// profile[k], 0 <= k <= n: sum over chains 1 <= k_1 .. k_l = k respecting
/// the links, of weight(k_1) * prod term_j(k_j). `weights` (size >= n+1)
/// defaults to all ones. An empty chain yields profile = {1, 0, ..., 0}.
template <class Ring>
std::vector<typename Ring::Scalar> chain_profile(const Ring& ring, long n, const Chain& c,
                                                 const std::vector<typename Ring::Scalar>* weights = nullptr) {
  using S = typename Ring::Scalar;
  std::vector<S> cur(static_cast<std::size_t>(n + 1), ring.zero());
  if (c.length() == 0) {
    cur[0] = ring.one();
    return cur;
  }
  for (long k = 1; k <= n; ++k) {
    cur[k] = ring.term(k, c.s[0], c.t[0]);
    if (weights) cur[k] = (*weights)[k] * cur[k];
  }
  for (long j = 1; j < c.length(); ++j) {
    std::vector<S> next(cur.size(), ring.zero());
    S acc = ring.zero();
    for (long k = 1; k <= n; ++k) {
      if (!c.strict[j - 1]) acc += cur[k];
      if (!acc.is_zero()) next[k] = ring.term(k, c.s[j], c.t[j]) * acc;
      if (c.strict[j - 1]) acc += cur[k];
    }
    cur = std::move(next);
  }
  return cur;
}

/// Sum over k of a profile; the full nested sum up to n.
template <class Scalar>
Scalar profile_total(const std::vector<Scalar>& prof) {
  Scalar acc = prof[0] - prof[0];
  for (const auto& x : prof) acc += x;
  return acc;
}

/// H_n^q(s;t), strict chain k_1 < ... < k_l <= n. Empty spec gives 1.
RatFunc h_sum(long n, const IndexSpec& spec);
/// S_n^q(s;t), non-strict chain.
RatFunc s_sum(long n, const IndexSpec& spec);
/// H_(p-1)^q(s;t) in Q[q]/[p]_q.
CycloElement h_sum_mod(long p, const IndexSpec& spec);
CycloElement s_sum_mod(long p, const IndexSpec& spec);
/// Same, at an arbitrary upper limit n < p.
CycloElement h_sum_mod(const ModulusPtr& m, long n, const IndexSpec& spec);
CycloElement s_sum_mod(const ModulusPtr& m, long n, const IndexSpec& spec);

/// T_n^q over a mixed chain of q^j/[j]_q terms. T_n(empty) = 1.
RatFunc t_sum(long n, const MixedSpec& m);
CycloElement t_sum_mod(long p, const MixedSpec& m);

/// A_n(s) = sum_k qbin(n,k)(-1)^(k-1) q^(C(k,2)+k) sum_{k_1<=..<=k_l=k} prod q^((s_j-1)k_j)/[k_j]^(s_j).
RatFunc alternating_binomial_sum(long n, const std::vector<long>& s);

/// Chain {1}^count as a vector.
std::vector<long> ones(long count);
/// Constant vector {value}^count.
std::vector<long> repeat(long value, long count);
std::vector<long> cat(std::initializer_list<std::vector<long>> parts);

IndexSpec reverse(const IndexSpec& spec);
/// Twist t_j -> s_j - t_j. Throws std::invalid_argument unless t_j <= s_j.
IndexSpec twist_complement(const IndexSpec& spec);
IndexSpec cat(const IndexSpec& a, const IndexSpec& b);

enum class SumKind { strict, non_strict };

struct ExpansionTerm {
  RatFunc coefficient;
  IndexSpec spec;  // default-twist spec
};

/// X_n(a) X_n(b) as a combination of X-sums (X = H or S):
/// X(a,b) + X(b,a) +- X(a+b) +- (1-q) X(a+b-1).
std::vector<ExpansionTerm> depth2_product_expand(long a, long b, SumKind kind);

/// All compositions of w (ordered, positive parts).
std::vector<std::vector<long>> compositions(long w);

}  // namespace qcong
