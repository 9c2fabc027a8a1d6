#pragma once

#include <string>

#include "qcong/poly.hpp"

namespace qcong {

/// Element of Q(q): num/den with gcd(num, den) = 1 and den monic.
/// Every construction and every arithmetic result is fully reduced, so two
/// values are equal iff their numerators and denominators are.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is zero.
  RatFunc(Poly num, Poly den);

  /// q^e for any integer e, including negative exponents.
  static RatFunc q_power(long e);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc inverse() const;
  /// "num/den" with both parts in canonical coefficient-list form.
  std::string to_string() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend RatFunc operator-(const RatFunc& a);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend RatFunc pow(const RatFunc& base, long exponent);

 private:
  struct Reduced {};
  RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

RatFunc pow(const RatFunc& base, long exponent);

}  // namespace qcong
