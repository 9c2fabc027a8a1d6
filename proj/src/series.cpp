#include "qcong/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcong {

Series::Series(long order) : order_(order) {
  if (order < 0) throw std::domain_error("Series: negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order + 1));
}

Series::Series(std::vector<Poly> coeffs, long order) : Series(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

const Poly& Series::coeff(long k) const {
  if (k < 0 || k > order_) throw std::out_of_range("Series: coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(k)];
}

Poly& Series::coeff(long k) {
  if (k < 0 || k > order_) throw std::out_of_range("Series: coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(k)];
}

Series Series::inverse() const {
  const Poly& c0 = coeffs_[0];
  if (c0.is_zero() || !c0.is_constant()) {
    throw std::domain_error("Series::inverse: constant term must be a nonzero rational");
  }
  const Rational inv0 = 1 / c0.leading();
  Series out(order_);
  out.coeffs_[0] = Poly(inv0);
  for (long n = 1; n <= order_; ++n) {
    Poly acc;
    for (long k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
    out.coeffs_[n] = -acc * inv0;
  }
  return out;
}

Series Series::exp() const {
  if (!coeffs_[0].is_zero()) throw std::domain_error("Series::exp: constant term must vanish");
  // E' = f' E, solved coefficientwise: n e_n = sum_k k f_k e_{n-k}.
  Series out(order_);
  out.coeffs_[0] = Poly(1);
  for (long n = 1; n <= order_; ++n) {
    Poly acc;
    for (long k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k] * Rational(k);
    out.coeffs_[n] = acc / Rational(n);
  }
  return out;
}

Series operator+(const Series& a, const Series& b) {
  Series out(std::min(a.order_, b.order_));
  for (long k = 0; k <= out.order_; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out(std::min(a.order_, b.order_));
  for (long k = 0; k <= out.order_; ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

Series operator*(const Series& a, const Series& b) {
  Series out(std::min(a.order_, b.order_));
  for (long i = 0; i <= out.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (long j = 0; i + j <= out.order_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

Series operator*(Series a, const Poly& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

Series binomial_series(const Rational& c, const Rational& alpha, long order) {
  Series out(order);
  Rational cpow(1);
  for (long k = 0; k <= order; ++k) {
    out.coeff(k) = Poly(Rational(gen_binomial(alpha, k) * cpow));
    cpow *= c;
  }
  return out;
}

}  // namespace qcong
