#include "qcong/cyclo.hpp"

#include <map>

namespace qcong {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModulusPtr CycloModulus::make(long p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("CycloModulus: p = " + std::to_string(p) + " is not a prime >= 3");
  }
  return ModulusPtr(new CycloModulus(p));
}

ModulusPtr CycloModulus::cached(long p) {
  thread_local std::map<long, ModulusPtr> cache;
  auto& slot = cache[p];
  if (!slot) slot = make(p);
  return slot;
}

CycloModulus::CycloModulus(long p) : p_(p) {
  phi_ = Poly(std::vector<Rational>(static_cast<std::size_t>(p), Rational(1)));
  inv_qint_.resize(static_cast<std::size_t>(p));
  for (long k = 1; k < p; ++k) {
    const Poly qint(std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)));
    const ExtGcd eg = ext_gcd(qint, phi_);
    if (eg.g.degree() != 0) throw NotInvertible("[k]_q shares a factor with Phi_p");
    inv_qint_[k] = reduce(eg.u);
  }
}

Poly CycloModulus::reduce(const Poly& f) const {
  if (f.degree() < p_ - 1) return f;
  std::vector<Rational> folded(static_cast<std::size_t>(p_), Rational(0));
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) folded[i % static_cast<std::size_t>(p_)] += c[i];
  const Rational top = folded.back();
  folded.pop_back();
  if (top != 0) {
    for (auto& x : folded) x -= top;
  }
  return Poly(std::move(folded));
}

const Poly& CycloModulus::inverse_qint(long k) const {
  if (k < 1 || k >= p_) throw NotInvertible("[k]_q is not a unit modulo Phi_p for k = " + std::to_string(k));
  return inv_qint_[static_cast<std::size_t>(k)];
}

CycloElement::CycloElement(ModulusPtr m, const Poly& f) : m_(std::move(m)), rep_(m_->reduce(f)) {}

CycloElement::CycloElement(ModulusPtr m, const Rational& c) : m_(std::move(m)), rep_(c) {}

namespace {
void require_same(const CycloElement& a, const CycloElement& b) {
  if (a.modulus()->p() != b.modulus()->p()) throw std::invalid_argument("CycloElement: mixed moduli");
}
}  // namespace

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
  require_same(a, b);
  return CycloElement(a.m_, a.rep_ + b.rep_, CycloElement::Canonical{});
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
  require_same(a, b);
  return CycloElement(a.m_, a.rep_ - b.rep_, CycloElement::Canonical{});
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  require_same(a, b);
  return CycloElement(a.m_, a.m_->reduce(a.rep_ * b.rep_), CycloElement::Canonical{});
}

CycloElement operator*(const CycloElement& a, const Rational& c) {
  return CycloElement(a.m_, a.rep_ * c, CycloElement::Canonical{});
}

CycloElement operator-(const CycloElement& a) { return CycloElement(a.m_, -a.rep_, CycloElement::Canonical{}); }

bool operator==(const CycloElement& a, const CycloElement& b) {
  return a.m_->p() == b.m_->p() && a.rep_ == b.rep_;
}

CycloElement reduce(const Poly& f, const ModulusPtr& m) { return CycloElement(m, f); }

CycloElement invert(const CycloElement& e) {
  if (e.is_zero()) throw NotInvertible("inverse of zero in Q[q]/Phi_p");
  const ExtGcd eg = ext_gcd(e.rep(), e.modulus()->phi());
  if (eg.g.degree() != 0) throw NotInvertible("element shares a factor with Phi_p");
  return CycloElement(e.modulus(), eg.u);
}

CycloElement embed(const RatFunc& f, const ModulusPtr& m) {
  if (f.is_zero()) return CycloElement(m, Rational(0));
  return reduce(f.num(), m) * invert(reduce(f.den(), m));
}

CycloElement q_power(long e, const ModulusPtr& m) {
  long r = e % m->p();
  if (r < 0) r += m->p();
  return CycloElement(m, Poly::monomial(Rational(1), static_cast<std::size_t>(r)));
}

CycloElement pow(const CycloElement& base, long exponent) {
  if (exponent < 0) return pow(invert(base), -exponent);
  CycloElement result(base.modulus(), Rational(1));
  CycloElement b = base;
  while (exponent) {
    if (exponent & 1L) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::optional<Rational> is_constant(const CycloElement& e) {
  if (e.rep().degree() <= 0) return e.rep().coeff(0);
  return std::nullopt;
}

}  // namespace qcong
