#include "qcong/q_objects.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qcong {

Poly qint(long n) {
  if (n < 0) throw std::domain_error("qint: negative argument");
  return Poly(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

Poly q_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  // rows[n][k]; grown on demand, never shared between threads.
  thread_local std::vector<std::vector<Poly>> rows{{Poly(1)}};
  while (static_cast<long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const long m = static_cast<long>(rows.size());
    std::vector<Poly> row(static_cast<std::size_t>(m + 1));
    row[0] = Poly(1);
    row[m] = Poly(1);
    for (long j = 1; j < m; ++j) row[j] = prev[j - 1] + Poly::monomial(Rational(1), j) * prev[j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Poly chebyshev_t(long n) {
  if (n < 0) throw std::domain_error("chebyshev_t: negative degree");
  Poly prev(1), cur = Poly::x();
  if (n == 0) return prev;
  const Poly two_x = Poly::monomial(Rational(2), 1);
  for (long i = 1; i < n; ++i) prev = std::exchange(cur, two_x * cur - prev);
  return cur;
}

Rational kummer_sum(long n, const Rational& a, const Rational& b) {
  if (n < 1) throw std::domain_error("kummer_sum: n must be positive");
  Rational sum(0);
  const Rational ab = a * b, apb = a + b;
  for (long k = 0; 2 * k <= n; ++k) {
    Rational term = gen_binomial(n - k, k) * Rational(n) / Rational(n - k);
    term *= pow(ab, k) * pow(apb, n - 2 * k);
    sum += (k % 2 == 0) ? term : Rational(-term);
  }
  return sum;
}

bool chebyshev_expansion_check(long p) {
  if (p < 3 || p % 2 == 0) throw std::domain_error("chebyshev_expansion_check: p must be odd and >= 3");
  const Poly tp = chebyshev_t(p);
  // z^((p-1)/2) times either side is a polynomial of degree (3p-1)/2.
  const long points = std::max<long>(p + 3, (3 * p - 1) / 2 + 1);
  for (long i = 1; i <= points; ++i) {
    const Rational u = make_rational(i + 1, 2);  // sqrt(z); z = u^2 > 0
    const Rational z = u * u;
    const Rational lhs = 2 * tp.eval(Rational(u * (3 - z) / 2)) / pow(u, p);
    Rational rhs(0);
    for (long k = 0; k <= (p - 1) / 2; ++k) {
      Rational term = gen_binomial(p - k, k) * Rational(p) / Rational(p - k);
      term *= pow(z, -k) * pow(Rational(3 - z), p - 2 * k);
      rhs += (k % 2 == 0) ? term : Rational(-term);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace qcong
