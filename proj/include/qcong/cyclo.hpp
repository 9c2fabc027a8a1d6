#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcong/poly.hpp"
#include "qcong/ratfunc.hpp"

namespace qcong {

/// Raised when an element shares a factor with the modulus. For the sums in
/// this library that means a hypothesis was violated upstream.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(long n);

class CycloModulus;
using ModulusPtr = std::shared_ptr<const CycloModulus>;

/// Phi_p(q) = 1 + q + ... + q^(p-1) for an odd prime p, i.e. [p]_q.
class CycloModulus {
 public:
  /// Throws std::invalid_argument unless p is a prime >= 3.
  static ModulusPtr make(long p);
  /// Same as make, memoized per thread.
  static ModulusPtr cached(long p);

  long p() const { return p_; }
  const Poly& phi() const { return phi_; }

  /// f mod Phi_p. Uses q^p = 1 to fold exponents, then eliminates q^(p-1).
  Poly reduce(const Poly& f) const;
  /// Canonical representative of 1/[k]_q for 1 <= k <= p-1.
  const Poly& inverse_qint(long k) const;

 private:
  explicit CycloModulus(long p);
  long p_;
  Poly phi_;
  std::vector<Poly> inv_qint_;
};

/// Residue class in Q[q]/Phi_p(q); rep has degree < p-1.
class CycloElement {
 public:
  CycloElement(ModulusPtr m, const Poly& f);
  CycloElement(ModulusPtr m, const Rational& c);

  const ModulusPtr& modulus() const { return m_; }
  const Poly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  std::string to_string() const { return rep_.to_string(); }

  friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const CycloElement& a, const Rational& c);
  friend CycloElement operator-(const CycloElement& a);
  CycloElement& operator+=(const CycloElement& b) { return *this = *this + b; }
  CycloElement& operator-=(const CycloElement& b) { return *this = *this - b; }
  CycloElement& operator*=(const CycloElement& b) { return *this = *this * b; }
  friend bool operator==(const CycloElement& a, const CycloElement& b);

 private:
  struct Canonical {};
  CycloElement(ModulusPtr m, Poly rep, Canonical) : m_(std::move(m)), rep_(std::move(rep)) {}
  ModulusPtr m_;
  Poly rep_;
};

CycloElement reduce(const Poly& f, const ModulusPtr& m);
/// Multiplicative inverse via extended Euclid against Phi_p.
CycloElement invert(const CycloElement& e);
/// num * den^-1 in the ring; NotInvertible when den shares a factor with Phi_p.
CycloElement embed(const RatFunc& f, const ModulusPtr& m);
/// q^e for any integer e (q is a unit: q^p = 1).
CycloElement q_power(long e, const ModulusPtr& m);
CycloElement pow(const CycloElement& base, long exponent);
/// The rational c when the element is the constant c (zero included).
std::optional<Rational> is_constant(const CycloElement& e);

}  // namespace qcong
