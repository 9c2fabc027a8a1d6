#include "qcong/ratfunc.hpp"

#include <stdexcept>

namespace qcong {

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const Rational lc = den.leading();
  num_ = num / lc;
  den_ = den / lc;
}

RatFunc RatFunc::q_power(long e) {
  if (e >= 0) return RatFunc(Poly::monomial(Rational(1), static_cast<std::size_t>(e)));
  return RatFunc(Poly(1), Poly::monomial(Rational(1), static_cast<std::size_t>(-e)), Reduced{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  const Rational lc = num_.leading();
  return RatFunc(den_ / lc, num_ / lc, Reduced{});
}

std::string RatFunc::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  // Henrici: only the common part of the denominators can cancel.
  const Poly g = gcd(a.den_, b.den_);
  if (g.degree() == 0) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
  const Poly bd = exact_div(b.den_, g);
  const Poly ad = exact_div(a.den_, g);
  Poly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return {};
  const Poly h = gcd(num, g);
  Poly den = ad * b.den_;
  if (h.degree() > 0) {
    num = exact_div(num, h);
    den = exact_div(den, h);
  }
  return RatFunc(std::move(num), std::move(den), RatFunc::Reduced{});
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Reduced{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Poly g1 = gcd(a.num_, b.den_);
  const Poly g2 = gcd(b.num_, a.den_);
  Poly num = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  Poly den = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  const Rational lc = den.leading();
  return RatFunc(num / lc, den / lc, RatFunc::Reduced{});
}

RatFunc pow(const RatFunc& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  // Powers of a reduced fraction stay reduced.
  const Poly n = pow(base.num(), static_cast<unsigned>(exponent));
  const Poly d = pow(base.den(), static_cast<unsigned>(exponent));
  return RatFunc(n, d, RatFunc::Reduced{});
}

}  // namespace qcong
