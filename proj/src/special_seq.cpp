#include "qcong/special_seq.hpp"

#include <map>
#include <stdexcept>

#include "qcong/series.hpp"

namespace qcong {

namespace {

// Truncation orders carry one guard coefficient past the index requested.
long guarded(long n) { return n + 2; }

// Coefficients n! [x^n] of 1/g for g given by its first coefficients.
// Memoized per thread; the cache is regrown (doubling) on demand.
class ReciprocalTable {
 public:
  using Generator = Rational (*)(long);
  explicit ReciprocalTable(Generator g) : gen_(g) {}

  Rational egf_coeff(long n) {
    if (n >= static_cast<long>(values_.size())) rebuild(std::max(guarded(n), 2 * static_cast<long>(values_.size())));
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  void rebuild(long order) {
    Series g(order);
    for (long k = 0; k <= order; ++k) g.coeff(k) = Poly(gen_(k));
    const Series inv = g.inverse();
    values_.resize(static_cast<std::size_t>(order + 1));
    for (long k = 0; k <= order; ++k) values_[k] = inv.coeff(k).coeff(0) * Rational(factorial(static_cast<unsigned>(k)));
  }
  Generator gen_;
  std::vector<Rational> values_;
};

// (e^x - 1)/x = sum x^k/(k+1)!
Rational exp_quotient_coeff(long k) { return Rational(1) / Rational(factorial(static_cast<unsigned>(k + 1))); }
// ln(1+x)/x = sum (-1)^k x^k/(k+1)
Rational log_quotient_coeff(long k) { return make_rational(k % 2 == 0 ? 1 : -1, k + 1); }

}  // namespace

Rational bernoulli(long n) {
  if (n < 0) throw std::out_of_range("bernoulli: negative index");
  thread_local ReciprocalTable table(exp_quotient_coeff);
  return table.egf_coeff(n);
}

Rational bernoulli2(long n) {
  if (n < 0) throw std::out_of_range("bernoulli2: negative index");
  thread_local ReciprocalTable table(log_quotient_coeff);
  return table.egf_coeff(n);
}

Integer stirling1(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("stirling1: need 0 <= k <= n");
  thread_local std::vector<std::vector<Integer>> rows{{Integer(1)}};
  while (static_cast<long>(rows.size()) <= n) {
    const long m = static_cast<long>(rows.size()) - 1;  // multiply row m by (x - m)
    const auto& prev = rows.back();
    std::vector<Integer> row(prev.size() + 1);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      row[j + 1] += prev[j];
      row[j] -= m * prev[j];
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

DegenBernoulli degen_bernoulli(long n) {
  if (n < 0) throw std::out_of_range("degen_bernoulli: negative index");
  const long order = guarded(n);
  // L = ln(1 + lambda x)/lambda = sum_{k>=1} (-1)^(k-1) lambda^(k-1) x^k / k,
  // kept one order higher because G = (e^L - 1)/x shifts down by one.
  Series log_term(order + 1);
  for (long k = 1; k <= order + 1; ++k) {
    log_term.coeff(k) = Poly::monomial(make_rational(k % 2 == 1 ? 1 : -1, k), static_cast<std::size_t>(k - 1));
  }
  const Series e = log_term.exp();
  Series g(order);
  for (long k = 0; k <= order; ++k) g.coeff(k) = e.coeff(k + 1);
  const Series inv = g.inverse();
  return {n, inv.coeff(n) * Rational(factorial(static_cast<unsigned>(n)))};
}

Rational k_gf(long n, long p) {
  if (n < 0) throw std::out_of_range("k_gf: negative index");
  if (p < 1) throw std::domain_error("k_gf: p must be positive");
  // Per-p cache of the coefficients of p w/((1+w)^p - 1).
  thread_local std::map<long, std::vector<Rational>> cache;
  auto& coeffs = cache[p];
  if (n >= static_cast<long>(coeffs.size())) {
    const long order = std::max(guarded(n), 2 * static_cast<long>(coeffs.size()));
    // ((1+w)^p - 1)/(p w) = sum_k binom(p, k+1) w^k / p
    Series s(order);
    for (long k = 0; k <= order; ++k) s.coeff(k) = Poly(Rational(gen_binomial(p, k + 1) / p));
    const Series inv = s.inverse();
    coeffs.resize(static_cast<std::size_t>(order + 1));
    for (long k = 0; k <= order; ++k) coeffs[k] = inv.coeff(k).coeff(0);
  }
  const Rational& c = coeffs[static_cast<std::size_t>(n)];
  return (n % 2 == 1) ? c : Rational(-c);
}

Rational k_bernoulli_stirling(long n, long p) {
  if (n < 2) throw std::domain_error("k_bernoulli_stirling: defined for n >= 2");
  Rational inner = bernoulli2(n) / n;
  const Rational p2 = Rational(p * p);
  Rational ppow(1);
  for (long j = 1; j <= n / 2; ++j) {
    ppow *= p2;
    inner += bernoulli(2 * j) / (2 * j) * Rational(stirling1(n - 1, 2 * j - 1)) * ppow;
  }
  const Rational scale = Rational(1) / Rational(factorial(static_cast<unsigned>(n - 1)));
  return (n % 2 == 1) ? Rational(scale * inner) : Rational(-scale * inner);
}

Rational k_via_degen(long n, long p) {
  if (n < 0) throw std::out_of_range("k_via_degen: negative index");
  if (p < 1) throw std::domain_error("k_via_degen: p must be positive");
  const Rational beta = degen_bernoulli(n).value.eval(make_rational(1, p));
  const Rational v = pow(Rational(p), n) * beta / Rational(factorial(static_cast<unsigned>(n)));
  return (n % 2 == 1) ? v : Rational(-v);
}

std::vector<KValue> k_table(long p, long max_n) {
  std::vector<KValue> out;
  for (long n = 0; n <= max_n; ++n) out.push_back({n, p, k_gf(n, p)});
  return out;
}

Poly k_interpolated_in_p2(long n, std::span<const long> nodes) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (long p : nodes) pts.emplace_back(Rational(p * p), k_gf(n, p));
  return lagrange_interpolate(pts);
}

}  // namespace qcong
