#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcong/rational.hpp"

namespace qcong {

/// Dense univariate polynomial over Q. The variable carries no name: the same
/// type stands for polynomials in q, x, z, lambda or p depending on the caller.
///
/// Coefficients are stored lowest degree first with trailing zeros stripped,
/// so the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor): constants promote
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, std::size_t degree);
  /// The variable itself.
  static Poly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(long i) const;
  const Rational& leading() const;

  Rational eval(const Rational& at) const;
  /// Divides by the leading coefficient; zero stays zero.
  Poly monic() const;
  /// Re-expansion about a point: the coefficients of f(a + w) in w.
  Poly taylor_shift(const Rational& a) const;
  /// f(g(x)).
  Poly compose(const Poly& g) const;
  /// Drops every term of degree > order.
  Poly truncate(long order) const;

  /// Canonical report form: exact coefficient list, lowest degree first.
  std::string to_string() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly pow(const Poly& base, unsigned exponent);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// a = quotient * b + remainder with deg(remainder) < deg(b). Throws
/// std::domain_error when b is zero.
DivMod divmod(const Poly& a, const Poly& b);

/// Exact quotient; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

struct ExtGcd {
  Poly g;
  Poly u;
  Poly v;
};

/// u*a + v*b = g with g the monic gcd. Throws std::domain_error if both are zero.
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Coefficient of (x - at)^k in f, by exact re-expansion.
Rational taylor_coeff(const Poly& f, const Rational& at, long k);

/// The unique polynomial of degree < nodes.size() through the given
/// (abscissa, value) pairs. Abscissae must be distinct.
Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> nodes);

namespace detail {
/// Integer-coefficient polynomial helpers used by the gcd fast path.
using IntPoly = std::vector<Integer>;
IntPoly primitive_integer_part(const Poly& f);
/// Heuristic gcd of two primitive integer polynomials; nullopt when the
/// evaluation points were unlucky and the caller has to fall back.
std::optional<IntPoly> heuristic_gcd(const IntPoly& a, const IntPoly& b);
}  // namespace detail

}  // namespace qcong
