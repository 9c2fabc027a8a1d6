#include "qcong/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcong {

namespace {

const Rational kZero(0);

// Least common denominator of all coefficients.
Integer common_denominator(const std::vector<Rational>& coeffs) {
  Integer d(1);
  for (const auto& c : coeffs) {
    if (c.get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  }
  return d;
}

std::vector<Integer> scaled_integers(const std::vector<Rational>& coeffs, const Integer& den) {
  std::vector<Integer> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  }
  return out;
}

Poly euclid_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  if (c == 0) return {};
  Poly out;
  out.coeffs_.assign(degree + 1, Rational(0));
  out.coeffs_[degree] = c;
  return out;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(long i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

Rational Poly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return *this / leading();
}

Poly Poly::taylor_shift(const Rational& a) const {
  // Horner in (w + a): after processing, coefficient i of c is the
  // coefficient of w^i.
  std::vector<Rational> c(coeffs_.begin(), coeffs_.end());
  const long n = static_cast<long>(c.size());
  if (a == 0) return *this;
  for (long i = 0; i < n; ++i) {
    for (long j = n - 2; j >= i; --j) c[j] += a * c[j + 1];
  }
  return Poly(std::move(c));
}

Poly Poly::compose(const Poly& g) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + Poly(*it);
  return acc;
}

Poly Poly::truncate(long order) const {
  if (degree() <= order) return *this;
  if (order < 0) return {};
  return Poly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

std::string Poly::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += qcong::to_string(coeffs_[i]);
  }
  return s + "]";
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("Poly: division by zero scalar");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Convolution over Z after clearing denominators; one canonicalization
  // per output coefficient instead of one per partial product.
  const Integer da = common_denominator(a.coeffs_);
  const Integer db = common_denominator(b.coeffs_);
  const auto ia = scaled_integers(a.coeffs_, da);
  const auto ib = scaled_integers(b.coeffs_, db);
  std::vector<Integer> prod(ia.size() + ib.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  const Integer den = da * db;
  std::vector<Rational> out(prod.size());
  for (std::size_t k = 0; k < prod.size(); ++k) out[k] = make_rational(prod[k], den);
  return Poly(std::move(out));
}

Poly operator-(Poly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1);
  Poly b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = 1 / b.leading();
  for (long i = a.degree() - db; i >= 0; --i) {
    const Rational c = rem[i + db] * inv_lead;
    quot[i] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) rem[i + j] -= c * b.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("ext_gcd: both inputs are zero");
  Poly r0 = a, r1 = b;
  Poly s0(1), s1;
  Poly t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const Rational lc = r0.leading();
  return {r0 / lc, s0 / lc, t0 / lc};
}

namespace detail {

IntPoly primitive_integer_part(const Poly& f) {
  IntPoly out = scaled_integers(f.coeffs(), common_denominator(f.coeffs()));
  Integer content(0);
  for (const auto& c : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content == 0) return out;
  if (out.back() < 0) content = -content;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return out;
}

namespace {

Integer max_norm(const IntPoly& f) {
  Integer m(0);
  for (const auto& c : f) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

Integer eval_at(const IntPoly& f, const Integer& x) {
  Integer acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Recovers the polynomial whose value at x is h, digits taken in the
// symmetric range (-x/2, x/2].
IntPoly xi_adic_expand(Integer h, const Integer& x) {
  IntPoly out;
  const Integer half = x / 2;
  while (h != 0) {
    Integer g;
    mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (g > half) g -= x;
    out.push_back(g);
    h -= g;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  return out;
}

IntPoly make_primitive(IntPoly f) {
  Integer content(0);
  for (const auto& c : f) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content == 0) return f;
  if (f.back() < 0) content = -content;
  for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return f;
}

bool divides_over_z(const IntPoly& h, IntPoly a) {
  const std::size_t dh = h.size() - 1;
  if (a.size() < h.size()) return false;
  for (std::size_t i = a.size() - h.size() + 1; i-- > 0;) {
    Integer& top = a[i + dh];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), h.back().get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), h.back().get_mpz_t());
    for (std::size_t j = 0; j <= dh; ++j) mpz_submul(a[i + j].get_mpz_t(), c.get_mpz_t(), h[j].get_mpz_t());
  }
  return std::all_of(a.begin(), a.end(), [](const Integer& c) { return c == 0; });
}

}  // namespace

std::optional<IntPoly> heuristic_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.size() == 1 || b.size() == 1) return IntPoly{Integer(1)};
  const Integer na = max_norm(a), nb = max_norm(b);
  const Integer bound = na < nb ? na : nb;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), bound.get_mpz_t());
  Integer x = 99 * root;
  if (bound < x) x = bound;
  const Integer ra = na / abs(a.back()), rb = nb / abs(b.back());
  const Integer floor_x = 2 * (ra < rb ? ra : rb) + 2;
  if (x < floor_x) x = floor_x;

  for (int attempt = 0; attempt < 6; ++attempt) {
    const Integer fa = eval_at(a, x), fb = eval_at(b, x);
    Integer h;
    mpz_gcd(h.get_mpz_t(), fa.get_mpz_t(), fb.get_mpz_t());
    if (h != 0) {
      IntPoly cand = make_primitive(xi_adic_expand(h, x));
      if (!cand.empty() && divides_over_z(cand, a) && divides_over_z(cand, b)) return cand;
    }
    Integer r1, r2;
    mpz_sqrt(r1.get_mpz_t(), x.get_mpz_t());
    mpz_sqrt(r2.get_mpz_t(), r1.get_mpz_t());
    x = 73794 * x * r2 / 27011;
  }
  return std::nullopt;
}

}  // namespace detail

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (auto g = detail::heuristic_gcd(detail::primitive_integer_part(a), detail::primitive_integer_part(b))) {
    std::vector<Rational> c(g->begin(), g->end());
    return Poly(std::move(c)).monic();
  }
  return euclid_gcd(a, b);
}

Rational taylor_coeff(const Poly& f, const Rational& at, long k) {
  if (k < 0) throw std::domain_error("taylor_coeff: negative index");
  if (k > f.degree()) return Rational(0);
  return f.taylor_shift(at).coeff(k);
}

Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> nodes) {
  Poly result;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Poly basis(1);
    Rational scale(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      if (nodes[i].first == nodes[j].first) throw std::domain_error("lagrange_interpolate: repeated node");
      basis *= Poly(std::vector<Rational>{-nodes[j].first, Rational(1)});
      scale *= nodes[i].first - nodes[j].first;
    }
    result += basis * (nodes[i].second / scale);
  }
  return result;
}

}  // namespace qcong
