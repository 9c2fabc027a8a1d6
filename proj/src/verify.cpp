#include "qcong/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

#include "qcong/q_objects.hpp"
#include "qcong/qmhs.hpp"
#include "qcong/series.hpp"
#include "qcong/special_seq.hpp"

namespace qcong {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::hypothesis_violated: return "hypothesis_violated";
  }
  return "fail";
}

std::optional<long> find_param(const Params& ps, const std::string& name) {
  for (const auto& [k, v] : ps)
    if (k == name) return v;
  return std::nullopt;
}

long param(const Params& ps, const std::string& name) {
  if (auto v = find_param(ps, name)) return *v;
  throw std::invalid_argument("missing parameter '" + name + "'");
}

std::vector<long> param_vector(const Params& ps, const std::string& prefix) {
  std::vector<long> out;
  // Accept both 0- and 1-based numbering.
  long i = find_param(ps, prefix + "0") ? 0 : 1;
  while (auto v = find_param(ps, prefix + std::to_string(i))) {
    out.push_back(*v);
    ++i;
  }
  return out;
}

void push_vector(Params& ps, const std::string& prefix, const std::vector<long>& v, bool zero_based) {
  for (std::size_t i = 0; i < v.size(); ++i) ps.emplace_back(prefix + std::to_string(i + (zero_based ? 0 : 1)), v[i]);
}

std::string params_to_string(const Params& ps) {
  std::string out;
  for (const auto& [k, v] : ps) out += (out.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return out;
}

namespace {

struct Outcome {
  Status status;
  std::string lhs;
  std::string rhs;
};

Outcome violated(const std::string& why) { return {Status::hypothesis_violated, why, ""}; }

Outcome compare_text(const std::string& a, const std::string& b) { return {a == b ? Status::pass : Status::fail, a, b}; }
Outcome compare(const CycloElement& a, const CycloElement& b) { return compare_text(a.to_string(), b.to_string()); }
Outcome compare(const RatFunc& a, const RatFunc& b) { return compare_text(a.to_string(), b.to_string()); }
Outcome compare(const Poly& a, const Poly& b) { return compare_text(a.to_string(), b.to_string()); }
Outcome compare(const Rational& a, const Rational& b) { return compare_text(to_string(a), to_string(b)); }

// ---- ring helpers ----

ModulusPtr ring(long p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not a prime >= 3");
  return CycloModulus::cached(p);
}

CycloElement one_minus_q(const ModulusPtr& m, long e) {
  return pow(CycloElement(m, Poly(std::vector<Rational>{Rational(1), Rational(-1)})), e);
}

CycloElement scaled(const ModulusPtr& m, const Rational& c, long e) { return one_minus_q(m, e) * c; }

Rational K(long n, long p) { return k_gf(n, p); }
Rational binom(long n, long k) { return gen_binomial(n, k); }
Rational sign(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

IndexSpec dflt(const std::vector<long>& s) { return IndexSpec::with_default_twist(s); }
IndexSpec twist_const(const std::vector<long>& s, long t) { return IndexSpec::make(s, std::vector<long>(s.size(), t)); }

// sum_i (t binom(t-1,i) + (t-1) binom(t,i)) (-1)^i K_(2t-i)(p)
Rational twos_kernel(long t, long p) {
  Rational acc;
  for (long i = 0; i <= t; ++i)
    acc += (Rational(t) * binom(t - 1, i) + Rational(t - 1) * binom(t, i)) * sign(i) * K(2 * t - i, p);
  return acc;
}

// ---- rational-function helpers ----

RatFunc q_pow(long e) { return RatFunc::q_power(e); }

// qbin(n,k) (-1)^k q^e
RatFunc qbin_weight(long n, long k, long e) { return RatFunc(q_binomial(n, k) * sign(k)) * q_pow(e); }

long c2(long k) { return k * (k - 1) / 2; }

RatFunc frac(long k, long s, long t) { return RatFuncRing{}.term(k, s, t); }

template <class S>
std::vector<S> prefix_sums(const std::vector<S>& prof) {
  std::vector<S> out(prof.size(), prof[0] - prof[0]);
  S acc = prof[0] - prof[0];
  for (std::size_t k = 0; k < prof.size(); ++k) {
    acc += prof[k];
    out[k] = acc;
  }
  return out;
}

// H_m(s), 0 <= m <= n, default twist.
std::vector<RatFunc> h_partials(long n, const std::vector<long>& s) {
  return prefix_sums(chain_profile(RatFuncRing{}, n, Chain::strict_chain(dflt(s))));
}

std::vector<RatFunc> t_partials(long n, const std::vector<long>& s) {
  return prefix_sums(chain_profile(RatFuncRing{}, n, Chain::mixed_chain(MixedSpec::from_composition(s))));
}

// Non-strict chain of r factors q^k/[k]_q.
Chain unit_chain(long r) { return Chain::nonstrict_chain(twist_const(repeat(1, r), 1)); }

// Seed sequences a_1..a_n for the transform lemmas; index 0 unused.
std::vector<RatFunc> seed_sequence(long seed, long n, const std::vector<long>& s) {
  std::vector<RatFunc> a(static_cast<std::size_t>(n + 1));
  if (seed == 0) {
    const auto h = h_partials(std::max(0L, n - 1), s);
    for (long k = 1; k <= n; ++k) a[k] = h[k - 1];
    return a;
  }
  std::mt19937_64 eng(static_cast<std::uint64_t>(seed) * 7919u);
  auto small = [&](long lo, long hi) { return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  for (long k = 1; k <= n; ++k) {
    std::vector<Rational> c;
    const long deg = small(0, 2);
    for (long i = 0; i <= deg; ++i) c.push_back(make_rational(small(-9, 9), small(1, 4)));
    a[k] = RatFunc(Poly(std::move(c)), pow(qint(k), static_cast<unsigned>(small(0, 1))));
  }
  return a;
}

// b_n = sum_k qbin(n,k)(-1)^k q^C(k,2) a_k
std::vector<RatFunc> transform(const std::vector<RatFunc>& a) {
  const long n = static_cast<long>(a.size()) - 1;
  std::vector<RatFunc> b(a.size());
  for (long m = 1; m <= n; ++m)
    for (long k = 1; k <= m; ++k) b[m] += qbin_weight(m, k, c2(k)) * a[k];
  return b;
}

// ---- duality strings ----

// Cat_{j<r}{{1}^(a_j-1), b_j+1}, {1}^(a_r-1), b_r
std::vector<long> duality_string(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out;
  const std::size_t r = a.size();
  for (std::size_t j = 0; j + 1 < r; ++j) {
    auto o = ones(a[j] - 1);
    out.insert(out.end(), o.begin(), o.end());
    out.push_back(b[j] + 1);
  }
  auto o = ones(a[r - 1] - 1);
  out.insert(out.end(), o.begin(), o.end());
  out.push_back(b[r - 1]);
  return out;
}

// The string with roles of a and b exchanged and reversed.
std::vector<long> duality_partner(const std::vector<long>& a, const std::vector<long>& b) {
  return duality_string(std::vector<long>(b.rbegin(), b.rend()), std::vector<long>(a.rbegin(), a.rend()));
}

// a_1, {1}^(b_1-1), Cat_{j>=2}{a_j+1, {1}^(b_j-1)}
std::vector<long> binomial_duality_string(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out{a[0]};
  auto o = ones(b[0] - 1);
  out.insert(out.end(), o.begin(), o.end());
  for (std::size_t j = 1; j < a.size(); ++j) {
    out.push_back(a[j] + 1);
    o = ones(b[j] - 1);
    out.insert(out.end(), o.begin(), o.end());
  }
  return out;
}

// ---- grids ----

using Grid = std::vector<Params>;

std::vector<std::vector<long>> compositions_upto(long max_weight, long max_depth, bool with_empty) {
  std::vector<std::vector<long>> out;
  if (with_empty) out.emplace_back();
  for (long w = 1; w <= max_weight; ++w)
    for (auto& c : compositions(w))
      if (max_depth <= 0 || static_cast<long>(c.size()) <= max_depth) out.push_back(std::move(c));
  return out;
}

// Pairs of positive vectors (a, b) of equal length with sum(a) + sum(b) <= total.
std::vector<std::pair<std::vector<long>, std::vector<long>>> duality_tuples(long total) {
  std::vector<std::pair<std::vector<long>, std::vector<long>>> out;
  for (long w = 2; w <= total; ++w) {
    for (const auto& c : compositions(w)) {
      if (c.size() % 2) continue;
      // Interleave: a_1, b_1, a_2, b_2, ...
      std::vector<long> a, b;
      for (std::size_t i = 0; i < c.size(); i += 2) {
        a.push_back(c[i]);
        b.push_back(c[i + 1]);
      }
      out.emplace_back(std::move(a), std::move(b));
    }
  }
  return out;
}

// All vectors of length len with non-negative entries summing to at most total.
void bounded_vectors(long len, long total, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (static_cast<long>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (long v = 0; v <= total; ++v) {
    cur.push_back(v);
    bounded_vectors(len, total - v, cur, out);
    cur.pop_back();
  }
}

Grid over_primes(const GridConfig& cfg) {
  Grid g;
  for (long p : cfg.primes) g.push_back({{"p", p}});
  return g;
}

Grid primes_by(const GridConfig& cfg, const std::string& name, long lo, long hi) {
  Grid g;
  for (long p : cfg.primes)
    for (long v = lo; v <= hi; ++v) g.push_back({{"p", p}, {name, v}});
  return g;
}

Grid primes_by_ab(const GridConfig& cfg, long max_sum_plus_one) {
  Grid g;
  for (long p : cfg.primes)
    for (long a = 0; a + 1 <= max_sum_plus_one; ++a)
      for (long b = 0; a + b + 1 <= max_sum_plus_one; ++b) g.push_back({{"p", p}, {"a", a}, {"b", b}});
  return g;
}

Grid n_grid(const GridConfig& cfg, const std::function<void(long, Grid&)>& per_n) {
  Grid g;
  for (long n = 1; n <= cfg.max_n; ++n) per_n(n, g);
  return g;
}

// ---- check bodies ----

Outcome depth1_fixed(const Params& ps, long s, long t, long min_p, const std::function<Rational(long)>& coeff) {
  const long p = param(ps, "p");
  const auto m = ring(p);
  if (p < min_p) return violated("needs p >= " + std::to_string(min_p));
  return compare(h_sum_mod(p, IndexSpec::make({s}, {t})), scaled(m, coeff(p), s));
}

std::vector<long> quasi_string(long a, long mid, long b, long fill) {
  return cat({repeat(fill, a), {mid}, repeat(fill, b)});
}

Outcome check_quasi(const Params& ps, bool strict, long fill, long mid) {
  const long p = param(ps, "p"), a = param(ps, "a"), b = param(ps, "b");
  const auto m = ring(p);
  const long t = a + b + 1;
  const auto x = dflt(quasi_string(a, mid, b, fill)), y = dflt(quasi_string(b, mid, a, fill));
  if (fill == 1) {
    if (strict) {
      if (p <= t) return violated("needs p > a+b+1");
      return compare(h_sum_mod(p, x) + h_sum_mod(p, y), scaled(m, -binom(p + 1, t + 2) / p, t + 1));
    }
    return compare(s_sum_mod(p, x) + s_sum_mod(p, y),
                   scaled(m, K(a + b + 1, p) - K(a + b + 2, p) - K(a + 1, p) * K(b + 1, p), a + b + 2));
  }
  if (p <= 2 * t + 1) return violated("needs p > 2(a+b+1)+1");
  if (strict)
    return compare(h_sum_mod(p, x) + h_sum_mod(p, y),
                   scaled(m, sign(t - 1) * binom(p + t, 2 * t + 1) / (p * (t + 1)), 2 * t + 1));
  return compare(s_sum_mod(p, x) + s_sum_mod(p, y), scaled(m, -twos_kernel(t, p), 2 * t + 1));
}

Outcome check_repeated_twos_shape(const Params& ps) {
  const long p = param(ps, "p"), t = param(ps, "t");
  ring(p);
  if (t < 1 || p <= t) return violated("needs 1 <= t < p");
  const auto here = repeated_twos_factor(p, t);
  if (!here) return {Status::fail, "nonconstant", "constant"};
  // t+2 nodes over-determine a degree-t fit.
  std::vector<std::pair<Rational, Rational>> nodes;
  for (long node = std::max(3L, t + 1); static_cast<long>(nodes.size()) < t + 2; ++node) {
    if (!is_prime(node)) continue;
    const auto f = repeated_twos_factor(node, t);
    if (!f) return {Status::fail, "nonconstant at p=" + std::to_string(node), "constant"};
    nodes.emplace_back(Rational(node), *f);
  }
  const Poly fit = lagrange_interpolate(nodes);
  const std::string lhs = "deg=" + std::to_string(fit.degree()) + ",lc=" + to_string(fit.is_zero() ? Rational(0) : fit.leading()) +
                          ",at_p=" + to_string(*here);
  const std::string rhs = "deg=" + std::to_string(t) + ",lc=1,at_p=" + to_string(fit.eval(Rational(p)));
  return compare_text(lhs, rhs);
}

Outcome check_generating_product(const Params& ps) {
  const long p = param(ps, "p");
  const auto m = ring(p);
  // Coefficients in x of prod_k (1 + x/(1-q^k)).
  std::vector<CycloElement> coeff{CycloElement(m, Rational(1))};
  const CycloElement inv_omq = invert(one_minus_q(m, 1));
  for (long k = 1; k < p; ++k) {
    const CycloElement f = inv_omq * CycloElement(m, m->inverse_qint(k));
    std::vector<CycloElement> next(coeff.size() + 1, CycloElement(m, Rational(0)));
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      next[i] += coeff[i];
      next[i + 1] += coeff[i] * f;
    }
    coeff = std::move(next);
  }
  std::string lhs, rhs;
  for (long l = 0; l < p; ++l) {
    lhs += (l ? ";" : "") + coeff[l].to_string();
    rhs += (l ? ";" : "") + CycloElement(m, binom(p, l + 1) / p).to_string();
  }
  return compare_text(lhs, rhs);
}

Rational cl_value(long p, long s, long delta, bool tilde) {
  const long order = 3 * s;
  Rational total;
  for (long k = 0; k <= p - delta; ++k) {
    const Rational c = sign(k) * binom(p - k - delta, k - delta);
    if (c == 0) continue;
    const long e2 = p - 2 * k;
    const long e1 = (tilde ? p : 0) + s - k;
    // (2-x)^e2 = 2^e2 (1 - x/2)^e2
    const Series a = binomial_series(make_rational(-1, 2), Rational(e2), order) * Poly(pow(Rational(2), e2));
    const Series b = binomial_series(Rational(1), Rational(e1), order);
    total += c * (a * b).coeff(order).coeff(0);
  }
  return total;
}

Outcome check_cl(const Params& ps, bool tilde) {
  const long p = param(ps, "p"), s = param(ps, "s"), d = param(ps, "delta");
  if (p < 1 || s < 1 || (d != 0 && d != 1)) return violated("needs p, s >= 1 and delta in {0,1}");
  const Rational closed = tilde ? sign(s + d) * binom(2 * s + p - 2 * d + 1, 3 * s + 1)
                                : sign(d) * binom(s + p - 2 * d + 1, 3 * s + 1);
  return compare(cl_value(p, s, d, tilde), closed);
}

Grid primes_compositions(const GridConfig& cfg, long max_weight) {
  Grid g;
  for (long p : cfg.primes)
    for (const auto& c : compositions_upto(max_weight, cfg.max_depth, false)) {
      Params ps{{"p", p}};
      push_vector(ps, "s", c);
      g.push_back(std::move(ps));
    }
  return g;
}

Grid n_compositions(const GridConfig& cfg, bool with_empty) {
  return n_grid(cfg, [&](long n, Grid& g) {
    for (const auto& c : compositions_upto(cfg.max_weight, cfg.max_depth, with_empty)) {
      Params ps{{"n", n}};
      push_vector(ps, "s", c);
      g.push_back(std::move(ps));
    }
  });
}

Grid random_reversal_grid(const GridConfig& cfg) {
  Grid g;
  for (long p : cfg.primes) {
    std::mt19937_64 eng(static_cast<std::uint64_t>(p) * 104729u);
    for (long i = 0; i < cfg.random_specs; ++i) {
      const long w = 1 + static_cast<long>(eng() % static_cast<std::uint64_t>(cfg.max_weight));
      const auto all = compositions(w);
      const auto& s = all[eng() % all.size()];
      std::vector<long> t;
      for (long x : s) t.push_back(static_cast<long>(eng() % static_cast<std::uint64_t>(x + 1)));
      Params ps{{"p", p}};
      push_vector(ps, "s", s);
      push_vector(ps, "t", t);
      g.push_back(std::move(ps));
    }
  }
  return g;
}

Grid duality_grid(const GridConfig& cfg, bool with_n) {
  Grid g;
  const auto tuples = duality_tuples(cfg.max_weight + 1);
  auto emit = [&](const std::string& key, long v) {
    for (const auto& [a, b] : tuples) {
      Params ps{{key, v}};
      push_vector(ps, "a", a);
      push_vector(ps, "b", b);
      g.push_back(std::move(ps));
    }
  };
  if (with_n) {
    for (long n = 1; n <= cfg.max_n; ++n) emit("n", n);
  } else {
    for (long p : cfg.primes) emit("p", p);
  }
  return g;
}

Grid transform_grid(const GridConfig& cfg, bool with_r) {
  return n_grid(cfg, [&](long n, Grid& g) {
    for (long r = 1; r <= (with_r ? 3 : 1); ++r) {
      for (const auto& c : compositions_upto(cfg.max_weight - (with_r ? r : 0), cfg.max_depth, true)) {
        Params ps{{"n", n}};
        if (with_r) ps.emplace_back("r", r);
        ps.emplace_back("seed", 0);
        push_vector(ps, "s", c);
        g.push_back(std::move(ps));
      }
      for (long seed = 1; seed <= 3; ++seed) {
        Params ps{{"n", n}};
        if (with_r) ps.emplace_back("r", r);
        ps.emplace_back("seed", seed);
        g.push_back(std::move(ps));
      }
    }
  });
}

Grid conjecture_grid(const GridConfig& cfg, long family) {
  Grid g;
  const long max_r = family == 12 ? cfg.max_r_12 : cfg.max_r_23;
  const long per_t = family == 12 ? 2 : 3, per_d = family == 12 ? 1 : 2;
  for (long t = 0; per_t * t <= max_r; ++t) {
    std::vector<std::vector<long>> ds;
    std::vector<long> cur;
    bounded_vectors(t + 1, (max_r - per_t * t) / per_d, cur, ds);
    for (long p : cfg.primes)
      for (const auto& d : ds) {
        Params ps{{"p", p}, {"t", t}};
        push_vector(ps, "d", d, true);
        g.push_back(std::move(ps));
      }
  }
  return g;
}

std::vector<long> rotate_left(std::vector<long> v, long k) {
  std::rotate(v.begin(), v.begin() + k, v.end());
  return v;
}

std::string constant_text(const ConjectureResult& r) {
  return r.constant ? to_string(r.constant->value) : "nonconstant";
}

struct Entry {
  std::string id;
  std::function<Grid(const GridConfig&)> grid;
  std::function<Outcome(const Params&)> run;
};

std::vector<Entry> make_registry() {
  std::vector<Entry> r;

  // ---- depth one ----
  r.push_back({"depth1.harmonic_untwisted", over_primes, [](const Params& ps) {
                 return depth1_fixed(ps, 1, 0, 3, [](long p) -> Rational { return Rational(p - 1) / 2; });
               }});
  r.push_back({"depth1.harmonic_twisted", over_primes, [](const Params& ps) {
                 return depth1_fixed(ps, 1, 1, 3, [](long p) -> Rational { return -Rational(p - 1) / 2; });
               }});
  r.push_back({"depth1.square_untwisted", over_primes, [](const Params& ps) {
                 return depth1_fixed(ps, 2, 0, 5, [](long p) -> Rational { return -Rational((p - 1) * (p - 5)) / 12; });
               }});
  r.push_back({"depth1.square_twisted", over_primes, [](const Params& ps) {
                 return depth1_fixed(ps, 2, 1, 5, [](long p) -> Rational { return -Rational(p * p - 1) / 12; });
               }});
  r.push_back({"depth1.twist_one", [](const GridConfig& c) { return primes_by(c, "n", 1, c.max_n); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), n = param(ps, "n");
                 return compare(h_sum_mod(p, IndexSpec::make({n}, {1})), scaled(ring(p), K(n, p), n));
               }});
  r.push_back({"depth1.twist_zero", [](const GridConfig& c) { return primes_by(c, "n", 1, c.max_n); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), n = param(ps, "n");
                 Rational c = Rational(p - 1) / 2;
                 for (long j = 2; j <= n; ++j) c += K(j, p);
                 return compare(h_sum_mod(p, IndexSpec::make({n}, {0})), scaled(ring(p), c, n));
               }});
  r.push_back({"depth1.general_twist",
               [](const GridConfig& c) {
                 Grid g;
                 for (long p : c.primes)
                   for (long n = 1; n <= c.max_n; ++n)
                     for (long t = 1; t <= n; ++t) g.push_back({{"p", p}, {"n", n}, {"t", t}});
                 return g;
               },
               [](const Params& ps) {
                 const long p = param(ps, "p"), n = param(ps, "n"), t = param(ps, "t");
                 const auto m = ring(p);
                 if (p <= 3 || t < 1 || t > n) return violated("needs p > 3 and n >= t >= 1");
                 Rational c;
                 for (long j = 0; j < t; ++j) c += binom(t - 1, j) * sign(j) * K(n - j, p);
                 return compare(h_sum_mod(p, IndexSpec::make({n}, {t})), scaled(m, c, n));
               }});
  r.push_back({"depth1.default_twist", [](const GridConfig& c) { return primes_by(c, "n", 1, c.max_n); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), n = param(ps, "n");
                 return compare(h_sum_mod(p, dflt({n})), scaled(ring(p), sign(n) * K(n, p), n));
               }});

  // ---- repeated strings without twist ----
  r.push_back({"repeated.ones", [](const GridConfig& c) { return primes_by(c, "t", 0, c.max_t); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), t = param(ps, "t");
                 const auto m = ring(p);
                 if (t < 0 || t > p - 1) return violated("needs 0 <= t <= p-1");
                 return compare(h_sum_mod(p, twist_const(ones(t), 0)), scaled(m, binom(p - 1, t) / (t + 1), t));
               }});
  r.push_back({"repeated.twos", [](const GridConfig& c) { return primes_by(c, "t", 1, c.max_t); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), t = param(ps, "t");
                 const auto m = ring(p);
                 if (t < 1 || p <= t) return violated("needs 1 <= t < p");
                 const Rational c = (sign(t) * binom(p - 1, 2 * t + 1) + binom(p - 1, t)) / ((t + 1) * p);
                 return compare(h_sum_mod(p, twist_const(repeat(2, t), 0)), scaled(m, c, 2 * t));
               }});
  r.push_back({"repeated.twos_shape", [](const GridConfig& c) { return primes_by(c, "t", 1, std::min(3L, c.max_t)); },
               check_repeated_twos_shape});

  // ---- homogeneous strings ----
  r.push_back({"homog.twos_strict", [](const GridConfig& c) { return primes_by(c, "t", 1, c.max_t); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), t = param(ps, "t");
                 const auto m = ring(p);
                 if (t < 1 || p <= t) return violated("needs 1 <= t < p");
                 return compare(h_sum_mod(p, dflt(repeat(2, t))),
                                scaled(m, sign(t) * binom(p + t, 2 * t + 1) / (p * (t + 1)), 2 * t));
               }});
  r.push_back({"homog.twos_nonstrict", [](const GridConfig& c) { return primes_by(c, "t", 0, c.max_t); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), t = param(ps, "t");
                 const auto m = ring(p);
                 if (t < 0 || p <= 2 * t + 1) return violated("needs p > 2t+1");
                 return compare(s_sum_mod(p, dflt(repeat(2, t))), scaled(m, twos_kernel(t, p), 2 * t));
               }});
  r.push_back({"homog.threes_strict", [](const GridConfig& c) { return primes_by(c, "t", 1, c.max_t); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), t = param(ps, "t");
                 const auto m = ring(p);
                 if (t < 1 || p <= t) return violated("needs 1 <= t < p");
                 const Rational c = (binom(p + 2 * t + 1, 3 * t + 2) + binom(-p + 2 * t + 1, 3 * t + 2)) /
                                    (Rational(t + 1) * p * p);
                 return compare(h_sum_mod(p, dflt(repeat(3, t))), scaled(m, c, 3 * t));
               }});
  r.push_back({"homog.ones_nonstrict", [](const GridConfig& c) { return primes_by(c, "t", 1, c.max_t); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), t = param(ps, "t");
                 const auto m = ring(p);
                 if (t < 1) return violated("needs t >= 1");
                 return compare(s_sum_mod(p, dflt(ones(t))), scaled(m, -K(t, p), t));
               }});
  r.push_back({"homog.one_twos_one", [](const GridConfig& c) { return primes_by(c, "t", 1, c.max_t); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), t = param(ps, "t");
                 const auto m = ring(p);
                 if (t < 1 || p <= 2 * t + 1) return violated("needs t >= 1 and p > 2t+1");
                 return compare(s_sum_mod(p, dflt(cat({{1}, repeat(2, t - 1), {1}}))), scaled(m, -twos_kernel(t, p), 2 * t));
               }});

  // ---- quasi-homogeneous strings ----
  auto ab = [](const GridConfig& c) { return primes_by_ab(c, c.max_t); };
  r.push_back({"quasi.ones_two_strict", ab, [](const Params& ps) { return check_quasi(ps, true, 1, 2); }});
  r.push_back({"quasi.ones_two_nonstrict", ab, [](const Params& ps) { return check_quasi(ps, false, 1, 2); }});
  r.push_back({"quasi.twos_three_strict", ab, [](const Params& ps) { return check_quasi(ps, true, 2, 3); }});
  r.push_back({"quasi.twos_three_nonstrict", ab, [](const Params& ps) { return check_quasi(ps, false, 2, 3); }});

  // ---- structural relations ----
  auto reversal = [](bool strict) {
    return [strict](const Params& ps) {
      const long p = param(ps, "p");
      ring(p);
      const auto spec = IndexSpec::make(param_vector(ps, "s"), param_vector(ps, "t"));
      const auto dual = twist_complement(reverse(spec));
      const Rational sg = sign(spec.weight());
      if (strict) return compare(h_sum_mod(p, spec), h_sum_mod(p, dual) * sg);
      return compare(s_sum_mod(p, spec), s_sum_mod(p, dual) * sg);
    };
  };
  r.push_back({"struct.reversal_strict", random_reversal_grid, reversal(true)});
  r.push_back({"struct.reversal_nonstrict", random_reversal_grid, reversal(false)});
  auto pair_grid = [](const GridConfig& c) {
    Grid g;
    for (long p : c.primes)
      for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) g.push_back({{"p", p}, {"a", a}, {"b", b}});
    return g;
  };
  auto pair = [](bool strict) {
    return [strict](const Params& ps) {
      const long p = param(ps, "p"), a = param(ps, "a"), b = param(ps, "b");
      const auto m = ring(p);
      const Rational prod = K(a, p) * K(b, p);
      const Rational c = strict ? Rational(prod - K(a + b, p) + K(a + b - 1, p)) : Rational(prod + K(a + b, p) - K(a + b - 1, p));
      const auto lhs = strict ? h_sum_mod(p, dflt({a, b})) + h_sum_mod(p, dflt({b, a}))
                              : s_sum_mod(p, dflt({a, b})) + s_sum_mod(p, dflt({b, a}));
      return compare(lhs, scaled(m, sign(a + b) * c, a + b));
    };
  };
  r.push_back({"struct.pair_strict", pair_grid, pair(true)});
  r.push_back({"struct.pair_nonstrict", pair_grid, pair(false)});
  r.push_back({"struct.top_qbinomial",
               [](const GridConfig& c) {
                 Grid g;
                 for (long p : c.primes)
                   for (long k = 0; k < p; ++k) g.push_back({{"p", p}, {"k", k}});
                 return g;
               },
               [](const Params& ps) {
                 const long p = param(ps, "p"), k = param(ps, "k");
                 const auto m = ring(p);
                 if (k < 0 || k >= p) return violated("needs 0 <= k < p");
                 return compare(reduce(q_binomial(p - 1, k), m), q_power(-(k * (k + 1) / 2), m) * sign(k));
               }});
  r.push_back({"struct.generating_product", over_primes, check_generating_product});
  r.push_back({"struct.nonstrict_duality", [](const GridConfig& c) { return duality_grid(c, false); },
               [](const Params& ps) {
                 const long p = param(ps, "p");
                 ring(p);
                 const auto a = param_vector(ps, "a"), b = param_vector(ps, "b");
                 long total = 0;
                 for (long x : a) total += x;
                 for (long x : b) total += x;
                 return compare(s_sum_mod(p, dflt(duality_string(a, b))),
                                s_sum_mod(p, dflt(duality_partner(a, b))) * sign(total));
               }});
  r.push_back({"struct.nonstrict_duality_pair",
               [](const GridConfig& c) {
                 Grid g;
                 for (long p : c.primes)
                   for (long a = 1; a <= c.max_weight; ++a)
                     for (long b = 1; a + b <= c.max_weight + 1; ++b) g.push_back({{"p", p}, {"a", a}, {"b", b}});
                 return g;
               },
               [](const Params& ps) {
                 const long p = param(ps, "p"), a = param(ps, "a"), b = param(ps, "b");
                 ring(p);
                 return compare(s_sum_mod(p, dflt(cat({ones(a - 1), {b}}))),
                                s_sum_mod(p, dflt(cat({ones(b - 1), {a}}))) * sign(a + b));
               }});
  r.push_back({"struct.strict_duality", [](const GridConfig& c) { return primes_compositions(c, c.max_weight); },
               [](const Params& ps) {
                 const long p = param(ps, "p");
                 ring(p);
                 const auto s = param_vector(ps, "s");
                 return compare(h_sum_mod(p, dflt(s)),
                                t_sum_mod(p, MixedSpec::from_composition(s)) * sign(static_cast<long>(s.size())));
               }});

  // ---- exact identities over Q(q) ----
  r.push_back({"ident.divisor_sum",
               [](const GridConfig& c) {
                 return n_grid(c, [&](long n, Grid& g) {
                   for (long s = 1; s <= c.max_weight; ++s) g.push_back({{"n", n}, {"s", s}});
                 });
               },
               [](const Params& ps) {
                 const long n = param(ps, "n"), s = param(ps, "s");
                 RatFunc lhs;
                 for (long k = 1; k <= n; ++k) lhs += qbin_weight(n, k, c2(k) + s * k) * frac(k, s, 0);
                 return compare(lhs, -t_sum(n, MixedSpec{s, {}}));
               }});
  r.push_back({"ident.divisor_inversion",
               [](const GridConfig& c) {
                 return n_grid(c, [&](long n, Grid& g) {
                   for (long s = 1; s <= c.max_weight; ++s) g.push_back({{"n", n}, {"s", s}});
                 });
               },
               [](const Params& ps) {
                 const long n = param(ps, "n"), s = param(ps, "s");
                 const auto prof = chain_profile(RatFuncRing{}, n, unit_chain(s));
                 RatFunc lhs;
                 for (long k = 1; k <= n; ++k) lhs += qbin_weight(n, k, c2(k) - n * k) * prof[k];
                 return compare(lhs, -h_sum(n, dflt({s})));
               }});
  r.push_back({"ident.binomial_duality", [](const GridConfig& c) { return duality_grid(c, true); },
               [](const Params& ps) {
                 const long n = param(ps, "n");
                 const auto a = param_vector(ps, "a"), b = param_vector(ps, "b");
                 const auto left = binomial_duality_string(a, b);
                 return compare(s_sum(n, twist_const(left, 1)), alternating_binomial_sum(n, duality_string(a, b)));
               }});
  r.push_back({"ident.strict_to_mixed", [](const GridConfig& c) { return n_compositions(c, false); },
               [](const Params& ps) {
                 const long n = param(ps, "n");
                 const auto s = param_vector(ps, "s");
                 const auto prof = chain_profile(RatFuncRing{}, n, Chain::strict_chain(dflt(s)));
                 RatFunc lhs;
                 for (long k = 1; k <= n; ++k) lhs += qbin_weight(n, k, c2(k) + k) * prof[k];
                 return compare(lhs, t_sum(n, MixedSpec::from_composition(s)) * RatFunc(sign(static_cast<long>(s.size()))));
               }});
  r.push_back({"ident.mixed_to_strict", [](const GridConfig& c) { return n_compositions(c, false); },
               [](const Params& ps) {
                 const long n = param(ps, "n");
                 const auto s = param_vector(ps, "s");
                 const auto prof = chain_profile(RatFuncRing{}, n, Chain::mixed_chain(MixedSpec::from_composition(s)));
                 RatFunc lhs;
                 for (long k = 1; k <= n; ++k) lhs += qbin_weight(n, k, c2(k) - n * k) * prof[k];
                 return compare(lhs, h_sum(n, dflt(s)) * RatFunc(sign(static_cast<long>(s.size()))));
               }});
  auto nj_grid = [](const GridConfig& c) {
    return n_grid(c, [](long n, Grid& g) {
      for (long j = 1; j <= n; ++j) g.push_back({{"n", n}, {"j", j}});
    });
  };
  r.push_back({"ident.qbin_top_sum", nj_grid, [](const Params& ps) {
                 const long n = param(ps, "n"), j = param(ps, "j");
                 Poly lhs;
                 for (long k = j; k <= n; ++k) lhs += q_binomial(k - 1, j - 1) * Poly::monomial(Rational(1), k);
                 return compare(lhs, q_binomial(n, j) * Poly::monomial(Rational(1), j));
               }});
  r.push_back({"ident.qbin_alternating_sum", nj_grid, [](const Params& ps) {
                 const long n = param(ps, "n"), j = param(ps, "j");
                 Poly lhs;
                 for (long k = j; k <= n; ++k) lhs += q_binomial(n, k) * Poly::monomial(sign(k), c2(k));
                 return compare(lhs, q_binomial(n - 1, j - 1) * Poly::monomial(sign(j), c2(j)));
               }});
  r.push_back({"ident.binomial_transform", [](const GridConfig& c) { return transform_grid(c, false); },
               [](const Params& ps) {
                 const long n = param(ps, "n"), seed = param(ps, "seed");
                 const auto a = seed_sequence(seed, n, param_vector(ps, "s"));
                 const auto b = transform(a);
                 RatFunc back;
                 for (long k = 1; k <= n; ++k) back += qbin_weight(n, k, c2(n - k)) * b[k];
                 return compare(back, a[n]);
               }});
  // Inverse with exponent C(k+1,2) - nk = C(n-k,2) - C(n,2).
  r.push_back({"ident.binomial_transform_normalized", [](const GridConfig& c) { return transform_grid(c, false); },
               [](const Params& ps) {
                 const long n = param(ps, "n"), seed = param(ps, "seed");
                 const auto a = seed_sequence(seed, n, param_vector(ps, "s"));
                 const auto b = transform(a);
                 RatFunc back;
                 for (long k = 1; k <= n; ++k) back += qbin_weight(n, k, c2(k + 1) - n * k) * b[k];
                 return compare(back, a[n]);
               }});
  r.push_back({"ident.transform_chain", [](const GridConfig& c) { return transform_grid(c, true); },
               [](const Params& ps) {
                 const long n = param(ps, "n"), r = param(ps, "r"), seed = param(ps, "seed");
                 const auto a = seed_sequence(seed, n, param_vector(ps, "s"));
                 const auto b = transform(a);
                 RatFunc lhs;
                 for (long k = 1; k <= n; ++k) lhs += qbin_weight(n, k, c2(k) + r * k) * frac(k, r, 0) * a[k];
                 return compare(lhs, profile_total(chain_profile(RatFuncRing{}, n, unit_chain(r), &b)));
               }});
  r.push_back({"ident.transform_chain_dual", [](const GridConfig& c) { return transform_grid(c, true); },
               [](const Params& ps) {
                 const long n = param(ps, "n"), r = param(ps, "r"), seed = param(ps, "seed");
                 const auto a = seed_sequence(seed, n, param_vector(ps, "s"));
                 const auto b = transform(a);
                 const auto prof = chain_profile(RatFuncRing{}, n, unit_chain(r), &b);
                 RatFunc lhs, rhs;
                 for (long k = 1; k <= n; ++k) {
                   lhs += qbin_weight(n, k, c2(k) - n * k) * prof[k];
                   rhs += frac(k, r, r - 1) * a[k];
                 }
                 return compare(lhs, rhs);
               }});
  // Compositions c = (s, r) with r the last part.
  auto split_last = [](const Params& ps) {
    auto s = param_vector(ps, "s");
    const long r = s.back();
    s.pop_back();
    return std::make_pair(s, r);
  };
  r.push_back({"ident.nested_recursion", [](const GridConfig& c) { return n_compositions(c, false); },
               [split_last](const Params& ps) {
                 const long n = param(ps, "n");
                 const auto [s, r] = split_last(ps);
                 const auto full = h_partials(n, param_vector(ps, "s"));
                 const auto head = h_partials(n, s);
                 RatFunc lhs, first, second;
                 for (long k = 1; k <= n; ++k) {
                   lhs += qbin_weight(n, k, c2(k)) * full[k - 1];
                   first += qbin_weight(n, k, c2(k) + (r - 1) * k) * frac(k, r - 1, 0) * head[k - 1];
                   second += qbin_weight(n, k, c2(k) + r * k) * frac(k, r, 0) * head[k - 1];
                 }
                 return compare(lhs, frac(n, 1, 1) * first - second);
               }});
  r.push_back({"ident.nested_tail", [](const GridConfig& c) { return n_compositions(c, true); },
               [](const Params& ps) {
                 const long n = param(ps, "n");
                 const auto s = param_vector(ps, "s");
                 const auto h = h_partials(n, s);
                 RatFunc lhs;
                 for (long k = 1; k <= n; ++k) lhs += qbin_weight(n, k, c2(k)) * h[k - 1];
                 return compare(lhs, t_partials(n, s)[n - 1] * RatFunc(sign(static_cast<long>(s.size()) + 1)));
               }});
  r.push_back({"ident.nested_chain", [](const GridConfig& c) { return n_compositions(c, false); },
               [split_last](const Params& ps) {
                 const long n = param(ps, "n");
                 const auto [s, r] = split_last(ps);
                 const auto h = h_partials(n, s);
                 RatFunc lhs;
                 for (long k = 1; k <= n; ++k) lhs += qbin_weight(n, k, c2(k) + r * k) * frac(k, r, 0) * h[k - 1];
                 const RatFunc rhs = t_sum(n, MixedSpec::from_composition(param_vector(ps, "s")));
                 return compare(lhs, rhs * RatFunc(sign(static_cast<long>(s.size()) + 1)));
               }});
  r.push_back({"ident.nested_chain_dual", [](const GridConfig& c) { return n_compositions(c, false); },
               [split_last](const Params& ps) {
                 const long n = param(ps, "n");
                 const auto [s, r] = split_last(ps);
                 const auto tp = t_partials(n, s);
                 std::vector<RatFunc> w(static_cast<std::size_t>(n + 1));
                 for (long k = 1; k <= n; ++k) w[k] = tp[k - 1];
                 const auto prof = chain_profile(RatFuncRing{}, n, unit_chain(r), &w);
                 RatFunc lhs;
                 for (long k = 1; k <= n; ++k) lhs += qbin_weight(n, k, c2(k) - n * k) * prof[k];
                 const RatFunc rhs = h_sum(n, dflt(param_vector(ps, "s")));
                 return compare(lhs, rhs * RatFunc(sign(static_cast<long>(s.size()) + 1)));
               }});
  r.push_back({"ident.kummer",
               [](const GridConfig& c) {
                 return n_grid(c, [](long n, Grid& g) {
                   for (long seed = 1; seed <= 5; ++seed) g.push_back({{"n", n}, {"seed", seed}});
                 });
               },
               [](const Params& ps) {
                 const long n = param(ps, "n"), seed = param(ps, "seed");
                 std::mt19937_64 eng(static_cast<std::uint64_t>(seed) * 31337u + static_cast<std::uint64_t>(n));
                 auto pick = [&] {
                   return make_rational(static_cast<long>(eng() % 19) - 9, 1 + static_cast<long>(eng() % 5));
                 };
                 const Rational a = pick(), b = pick();
                 return compare(kummer_sum(n, a, b), pow(a, n) + pow(b, n));
               }});
  r.push_back({"ident.chebyshev_expansion", over_primes, [](const Params& ps) {
                 const long p = param(ps, "p");
                 if (p < 3 || p % 2 == 0) return violated("needs odd p >= 3");
                 return compare_text(chebyshev_expansion_check(p) ? "equal" : "different", "equal");
               }});

  // ---- combinatorial lemma ----
  auto cl_grid = [](const GridConfig& c) {
    Grid g;
    for (long p = 1; p <= c.cl_max_p; ++p)
      for (long s = 1; s <= c.cl_max_s; ++s)
        for (long d = 0; d <= 1; ++d) g.push_back({{"p", p}, {"s", s}, {"delta", d}});
    return g;
  };
  r.push_back({"cl.plain", cl_grid, [](const Params& ps) { return check_cl(ps, false); }});
  r.push_back({"cl.tilde", cl_grid, [](const Params& ps) { return check_cl(ps, true); }});

  // ---- cyclic sums ----
  auto conj = [](long family) {
    return [family](const Params& ps) {
      const auto res = conjecture_check(param(ps, "p"), family, param_vector(ps, "d"));
      return Outcome{res.report.status, res.report.lhs, res.report.rhs};
    };
  };
  r.push_back({"conj.cyclic12", [](const GridConfig& c) { return conjecture_grid(c, 12); }, conj(12)});
  r.push_back({"conj.cyclic23", [](const GridConfig& c) { return conjecture_grid(c, 23); }, conj(23)});
  r.push_back({"conj.cyclic12_pair", [](const GridConfig& c) { return primes_by_ab(c, std::max(1L, c.max_r_12 - 1)); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), a = param(ps, "a"), b = param(ps, "b");
                 const auto m = ring(p);
                 const long t = a + b + 1;
                 if (p <= t + 2) return violated("needs p > a+b+3");
                 const auto cyc = cyclic_sum(p, 12, {a, b});
                 const auto direct = h_sum_mod(p, dflt(quasi_string(a, 2, b, 1))) + h_sum_mod(p, dflt(quasi_string(b, 2, a, 1)));
                 const auto cyc_rhs = scaled(m, -binom(p + 1, t + 2) / p, t + 1);
                 const auto quasi_rhs = scaled(m, sign(1) * binom(p + 1, cyclic_weight(12, {a, b}) + 1) / p, t + 1);
                 return compare_text(cyc.to_string() + "|" + cyc_rhs.to_string(), direct.to_string() + "|" + quasi_rhs.to_string());
               }});
  r.push_back({"conj.cyclic23_flat", [](const GridConfig& c) { return primes_by(c, "t", 1, std::max(1L, c.max_r_23 / 3)); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), t = param(ps, "t");
                 ring(p);
                 if (p <= 3 * t + 1) return violated("needs p > 3t+1");
                 const auto res = conjecture_check(p, 23, std::vector<long>(static_cast<std::size_t>(t + 1), 0));
                 const Rational expect = (binom(p + 2 * t + 1, 3 * t + 2) + binom(-p + 2 * t + 1, 3 * t + 2)) / p;
                 return compare_text(constant_text(res), to_string(expect));
               }});
  r.push_back({"conj.cyclic23_pair", [](const GridConfig& c) { return primes_by_ab(c, std::max(1L, (c.max_r_23 - 1) / 2)); },
               [](const Params& ps) {
                 const long p = param(ps, "p"), a = param(ps, "a"), b = param(ps, "b");
                 ring(p);
                 const long t = a + b + 1;
                 if (p <= 2 * t + 2) return violated("needs p > 2(a+b+1)+2");
                 const auto res = conjecture_check(p, 23, {a, b});
                 const Rational expect = sign(t - 1) * binom(p + t, 2 * t + 1) / (t + 1);
                 return compare_text(constant_text(res), to_string(expect));
               }});
  r.push_back({"conj.cyclic23_rotation", [](const GridConfig& c) { return conjecture_grid(c, 23); },
               [](const Params& ps) {
                 const long p = param(ps, "p");
                 const auto d = param_vector(ps, "d");
                 const auto base = conjecture_check(p, 23, d);
                 if (base.report.status == Status::hypothesis_violated) return violated(base.report.lhs);
                 std::string lhs, rhs;
                 for (std::size_t k = 0; k < d.size(); ++k) {
                   lhs += (k ? ";" : "") + constant_text(base);
                   rhs += (k ? ";" : "") + constant_text(conjecture_check(p, 23, rotate_left(d, static_cast<long>(k))));
                 }
                 return compare_text(lhs, rhs);
               }});
  return r;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = make_registry();
  return r;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown check '" + id + "'");
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.push_back(e.id);
  return out;
}

bool has_check(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return true;
  return false;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<std::string> select_checks(const std::vector<std::string>& patterns) {
  std::vector<std::string> out;
  for (const auto& id : check_ids())
    for (const auto& pat : patterns)
      if (glob_match(pat, id)) {
        out.push_back(id);
        break;
      }
  return out;
}

std::vector<CheckCell> build_grid(const std::vector<std::string>& ids, const GridConfig& cfg) {
  std::vector<CheckCell> cells;
  for (const auto& id : ids)
    for (auto& ps : entry(id).grid(cfg)) cells.push_back({id, std::move(ps)});
  return cells;
}

CheckReport run_cell(const CheckCell& cell) {
  const auto& e = entry(cell.check_id);
  const auto start = std::chrono::steady_clock::now();
  const Outcome o = e.run(cell.params);
  CheckReport rep{cell.check_id, cell.params, o.status, o.lhs, o.rhs, {}};
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

std::vector<CheckReport> run_cells(const std::vector<CheckCell>& cells, unsigned workers) {
  std::vector<CheckReport> out(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      try {
        out[i] = run_cell(cells[i]);
      } catch (const std::exception& ex) {
        out[i] = CheckReport{cells[i].check_id, cells[i].params, Status::fail, std::string("error: ") + ex.what(), "", {}};
      }
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return out;
}

std::vector<long> cyclic_string(long family, const std::vector<long>& d, long rotation) {
  if (family != 12 && family != 23) throw std::invalid_argument("family must be 12 or 23");
  if (d.empty()) throw std::invalid_argument("cyclic sum needs at least one block");
  const long fill = family == 12 ? 1 : 2, sep = family == 12 ? 2 : 3;
  const long n = static_cast<long>(d.size());
  std::vector<long> out;
  for (long j = 0; j < n; ++j) {
    if (j) out.push_back(sep);
    const auto block = repeat(fill, d[static_cast<std::size_t>((rotation + j) % n)]);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

long cyclic_weight(long family, const std::vector<long>& d) {
  long w = 0;
  for (long x : cyclic_string(family, d, 0)) w += x;
  return w;
}

CycloElement cyclic_sum(long p, long family, const std::vector<long>& d) {
  const auto m = ring(p);
  CycloElement acc(m, Rational(0));
  for (long i = 0; i < static_cast<long>(d.size()); ++i) acc += h_sum_mod(p, dflt(cyclic_string(family, d, i)));
  return acc;
}

ConjectureResult conjecture_check(long p, long family, const std::vector<long>& d) {
  const auto start = std::chrono::steady_clock::now();
  const auto m = ring(p);
  for (long x : d)
    if (x < 0) throw std::invalid_argument("d entries must be non-negative");
  const long t = static_cast<long>(d.size()) - 1;
  const long r = cyclic_weight(family, d);
  ConjectureResult res;
  res.report.check_id = family == 12 ? "conj.cyclic12" : "conj.cyclic23";
  res.report.params = {{"p", p}, {"t", t}};
  push_vector(res.report.params, "d", d, true);
  if (p <= r + 1) {
    res.report.status = Status::hypothesis_violated;
    res.report.lhs = "needs p > r+1 with r = " + std::to_string(r);
  } else {
    const CycloElement lhs = cyclic_sum(p, family, d);
    Outcome o;
    if (family == 12) {
      o = compare(lhs, scaled(m, sign(t) * binom(p + t, r + 1) / p, r));
    } else {
      const CycloElement x = lhs * Rational(p) * one_minus_q(m, -r);
      const Rational c0 = x.rep().coeff(0);
      o = compare_text(x.to_string(), Poly(c0).to_string());
      if (o.status == Status::pass) res.constant = ExtractedConstant{p, r, t, d, c0};
    }
    res.report.status = o.status;
    res.report.lhs = o.lhs;
    res.report.rhs = o.rhs;
  }
  res.report.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

std::optional<Rational> repeated_twos_factor(long p, long t) {
  const auto m = ring(p);
  const Rational scale = sign(t) * Rational(factorial(static_cast<unsigned>(2 * t + 2))) /
                         (Rational(2) * Rational(factorial(static_cast<unsigned>(t))) * binom(p - 1, t));
  const CycloElement x = h_sum_mod(p, twist_const(repeat(2, t), 0)) * scale * one_minus_q(m, -2 * t);
  return is_constant(x);
}

}  // namespace qcong
