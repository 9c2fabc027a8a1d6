#pragma once

#include <vector>

#include "qcong/poly.hpp"

namespace qcong {

/// Power series in x truncated after x^order. Coefficients are polynomials in
/// a secondary variable (lambda, p, ...); plain rational series use constant
/// coefficients.
class Series {
 public:
  /// The zero series of the given order.
  explicit Series(long order);
  Series(std::vector<Poly> coeffs, long order);

  long order() const { return order_; }
  /// Coefficient of x^k. Throws std::out_of_range when k > order.
  const Poly& coeff(long k) const;
  Poly& coeff(long k);

  /// Reciprocal of a series whose constant coefficient is a nonzero rational.
  /// Throws std::domain_error otherwise.
  Series inverse() const;
  /// exp of a series with zero constant term.
  Series exp() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Poly& c);
  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Poly> coeffs_;
  long order_;
};

/// Coefficient extraction in the style of [x^k]f.
inline const Poly& coeff_at(const Series& f, long k) { return f.coeff(k); }
inline Rational coeff_at(const Poly& f, long k) { return f.coeff(k); }

/// (1 + c x)^alpha truncated at order, for any rational alpha, via the
/// generalized binomial series.
Series binomial_series(const Rational& c, const Rational& alpha, long order);

}  // namespace qcong
