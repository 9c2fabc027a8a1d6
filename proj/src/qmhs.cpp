#include "qcong/qmhs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "qcong/q_objects.hpp"

namespace qcong {

IndexSpec IndexSpec::with_default_twist(std::vector<long> s) {
  std::vector<long> t;
  for (long x : s) t.push_back(x - 1);
  return make(std::move(s), std::move(t));
}

IndexSpec IndexSpec::make(std::vector<long> s, std::vector<long> t) {
  if (s.size() != t.size()) throw std::invalid_argument("IndexSpec: s and t differ in length");
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 1) throw std::invalid_argument("IndexSpec: exponents must be positive");
    if (t[j] < 0) throw std::invalid_argument("IndexSpec: twists must be non-negative");
  }
  return IndexSpec{std::move(s), std::move(t)};
}

long IndexSpec::weight() const { return std::accumulate(s.begin(), s.end(), 0L); }

std::string IndexSpec::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + std::to_string(s[j]);
  out += ";";
  for (std::size_t j = 0; j < t.size(); ++j) out += (j ? "," : "") + std::to_string(t[j]);
  return out + ")";
}

MixedSpec MixedSpec::from_composition(const std::vector<long>& s) {
  MixedSpec m;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 1) throw std::invalid_argument("MixedSpec: parts must be positive");
    m.w += s[j];
    if (j + 1 < s.size()) m.strict.push_back(m.w);
  }
  return m;
}

bool MixedSpec::is_strict(long link) const { return std::binary_search(strict.begin(), strict.end(), link); }

Chain Chain::strict_chain(const IndexSpec& spec) {
  return Chain{spec.s, spec.t, std::vector<bool>(spec.s.empty() ? 0 : spec.s.size() - 1, true)};
}

Chain Chain::nonstrict_chain(const IndexSpec& spec) {
  return Chain{spec.s, spec.t, std::vector<bool>(spec.s.empty() ? 0 : spec.s.size() - 1, false)};
}

Chain Chain::mixed_chain(const MixedSpec& m) {
  Chain c{std::vector<long>(m.w, 1), std::vector<long>(m.w, 1), {}};
  for (long i = 1; i < m.w; ++i) c.strict.push_back(m.is_strict(i));
  return c;
}

RatFunc RatFuncRing::term(long k, long s, long t) const {
  thread_local std::map<std::tuple<long, long, long>, RatFunc> cache;
  const auto key = std::make_tuple(k, s, t);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  RatFunc v(Poly::monomial(Rational(1), static_cast<std::size_t>(t * k)),
            pow(qint(k), static_cast<unsigned>(s)));
  cache.emplace(key, v);
  return v;
}

CycloElement CycloRing::term(long k, long s, long t) const {
  return q_power(t * k, m) * pow(CycloElement(m, m->inverse_qint(k)), s);
}

namespace {

template <class Ring>
typename Ring::Scalar chain_total(const Ring& ring, long n, const Chain& c) {
  if (n < 0) throw std::invalid_argument("sum: n must be non-negative");
  return profile_total(chain_profile(ring, n, c));
}

}  // namespace

RatFunc h_sum(long n, const IndexSpec& spec) { return chain_total(RatFuncRing{}, n, Chain::strict_chain(spec)); }
RatFunc s_sum(long n, const IndexSpec& spec) { return chain_total(RatFuncRing{}, n, Chain::nonstrict_chain(spec)); }

CycloElement h_sum_mod(const ModulusPtr& m, long n, const IndexSpec& spec) {
  return chain_total(CycloRing{m}, n, Chain::strict_chain(spec));
}
CycloElement s_sum_mod(const ModulusPtr& m, long n, const IndexSpec& spec) {
  return chain_total(CycloRing{m}, n, Chain::nonstrict_chain(spec));
}
CycloElement h_sum_mod(long p, const IndexSpec& spec) { return h_sum_mod(CycloModulus::cached(p), p - 1, spec); }
CycloElement s_sum_mod(long p, const IndexSpec& spec) { return s_sum_mod(CycloModulus::cached(p), p - 1, spec); }

RatFunc t_sum(long n, const MixedSpec& m) { return chain_total(RatFuncRing{}, n, Chain::mixed_chain(m)); }
CycloElement t_sum_mod(long p, const MixedSpec& m) {
  return chain_total(CycloRing{CycloModulus::cached(p)}, p - 1, Chain::mixed_chain(m));
}

RatFunc alternating_binomial_sum(long n, const std::vector<long>& s) {
  if (n < 1 || s.empty()) throw std::invalid_argument("alternating_binomial_sum: needs n >= 1 and depth >= 1");
  const auto prof = chain_profile(RatFuncRing{}, n, Chain::nonstrict_chain(IndexSpec::with_default_twist(s)));
  RatFunc acc;
  for (long k = 1; k <= n; ++k) {
    const Poly w = q_binomial(n, k) * Poly::monomial(Rational(k % 2 ? 1 : -1), static_cast<std::size_t>(k * (k - 1) / 2 + k));
    acc += RatFunc(w) * prof[k];
  }
  return acc;
}

std::vector<long> ones(long count) { return repeat(1, count); }
std::vector<long> repeat(long value, long count) { return std::vector<long>(static_cast<std::size_t>(std::max(0L, count)), value); }

std::vector<long> cat(std::initializer_list<std::vector<long>> parts) {
  std::vector<long> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

IndexSpec reverse(const IndexSpec& spec) {
  return IndexSpec{std::vector<long>(spec.s.rbegin(), spec.s.rend()), std::vector<long>(spec.t.rbegin(), spec.t.rend())};
}

IndexSpec twist_complement(const IndexSpec& spec) {
  IndexSpec out = spec;
  for (std::size_t j = 0; j < spec.s.size(); ++j) {
    if (spec.t[j] > spec.s[j]) throw std::invalid_argument("twist_complement: twist exceeds exponent");
    out.t[j] = spec.s[j] - spec.t[j];
  }
  return out;
}

IndexSpec cat(const IndexSpec& a, const IndexSpec& b) {
  IndexSpec out = a;
  out.s.insert(out.s.end(), b.s.begin(), b.s.end());
  out.t.insert(out.t.end(), b.t.begin(), b.t.end());
  return out;
}

std::vector<ExpansionTerm> depth2_product_expand(long a, long b, SumKind kind) {
  if (a < 1 || b < 1) throw std::invalid_argument("depth2_product_expand: a, b >= 1");
  const RatFunc sign(kind == SumKind::strict ? 1 : -1);
  std::vector<ExpansionTerm> out;
  out.push_back({RatFunc(1), IndexSpec::with_default_twist({a, b})});
  out.push_back({RatFunc(1), IndexSpec::with_default_twist({b, a})});
  out.push_back({sign, IndexSpec::with_default_twist({a + b})});
  out.push_back({sign * RatFunc(Poly(std::vector<Rational>{Rational(1), Rational(-1)})),
                 IndexSpec::with_default_twist({a + b - 1})});
  return out;
}

std::vector<std::vector<long>> compositions(long w) {
  std::vector<std::vector<long>> out;
  if (w <= 0) {
    out.emplace_back();
    return out;
  }
  // Each of the w-1 gaps is a cut or not.
  for (long mask = 0; mask < (1L << (w - 1)); ++mask) {
    std::vector<long> c;
    long part = 1;
    for (long i = 0; i < w - 1; ++i) {
      if (mask >> i & 1) {
        c.push_back(part);
        part = 1;
      } else {
        ++part;
      }
    }
    c.push_back(part);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qcong
