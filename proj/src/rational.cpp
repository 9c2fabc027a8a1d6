#include "qcong/rational.hpp"

#include <stdexcept>

namespace qcong {

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("pow: zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);  // already coprime
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational gen_binomial(const Rational& alpha, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) {
    r *= alpha - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace qcong
