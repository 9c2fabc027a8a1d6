#include <doctest.h>

#include "qcong/q_objects.hpp"
#include "qcong/qmhs.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace qcong;
using qcong::test::P;
using qcong::test::R;

namespace {

using qcong::test::brute_h;
using qcong::test::brute_s;
using qcong::test::brute_t;
using qcong::test::raw_term;
using qcong::test::twisted_specs;

const RatFunc q = RatFunc(P({0, 1}));
const RatFunc one_minus_q = RatFunc(P({1, -1}));

}  // namespace

TEST_SUITE("qmhs") {

TEST_CASE("index spec helpers") {
  const IndexSpec d = IndexSpec::with_default_twist({1, 3, 2});
  CHECK(d.t == std::vector<long>{0, 2, 1});
  CHECK(d.depth() == 3);
  CHECK(d.weight() == 6);
  CHECK_THROWS_AS(IndexSpec::make({1, 2}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSpec::make({0}, {0}), std::invalid_argument);

  const IndexSpec x = IndexSpec::make({1, 2}, {0, 1});
  CHECK(reverse(x) == IndexSpec::make({2, 1}, {1, 0}));
  CHECK(twist_complement(reverse(x)).t == std::vector<long>{1, 1});
  const IndexSpec pal = IndexSpec::make({2, 1, 2}, {1, 0, 1});
  CHECK(reverse(pal) == pal);
  CHECK(twist_complement(reverse(d)).t == std::vector<long>{1, 1, 1});
  CHECK_THROWS_AS(twist_complement(IndexSpec::make({1}, {2})), std::invalid_argument);

  CHECK(cat({ones(0), {2}}) == std::vector<long>{2});
  CHECK(cat({{1, 1}, {3}}) == std::vector<long>{1, 1, 3});
  // Cat({1}^a, 2, {1}^b) for a = 1, b = 2.
  CHECK(cat({ones(1), {2}, ones(2)}) == std::vector<long>{1, 2, 1, 1});

  const MixedSpec m = MixedSpec::from_composition({2, 1, 2});
  CHECK(m.w == 5);
  CHECK(m.strict == std::vector<long>{2, 3});
  CHECK(compositions(4).size() == 8);
  CHECK(compositions(0).size() == 1);
}

TEST_CASE("sum examples") {
  const IndexSpec h11 = IndexSpec::make({1}, {1});
  const RatFunc expect = q + RatFunc(P({0, 0, 1}), P({1, 1})) + RatFunc(P({0, 0, 0, 1}), P({1, 1, 1}));
  CHECK(h_sum(3, h11) == expect);
  CHECK(h_sum(2, IndexSpec::with_default_twist({1, 1, 1})).is_zero());
  CHECK(h_sum(5, IndexSpec{}) == RatFunc(1));
  CHECK(s_sum(5, IndexSpec{}) == RatFunc(1));
  CHECK(h_sum(0, IndexSpec{}) == RatFunc(1));

  CHECK(h_sum_mod(3, h11).rep() == P({-1, 1}));

  const RatFunc half(P({1}), P({1, 1}));
  CHECK(s_sum(2, IndexSpec::make({1, 1}, {0, 0})) == RatFunc(1) + half + half * half);

  MixedSpec single{1, {}};
  CHECK(t_sum(2, single) == q + RatFunc(P({0, 0, 1}), P({1, 1})));
  CHECK(t_sum(4, MixedSpec{}) == RatFunc(1));
  CHECK(t_sum(3, MixedSpec{3, {1, 2}}) == h_sum(3, IndexSpec::make({1, 1, 1}, {1, 1, 1})));
}

TEST_CASE("alternating binomial sum examples") {
  CHECK(alternating_binomial_sum(1, {1}) == q);
  CHECK(alternating_binomial_sum(2, {1}) == q + RatFunc(P({0, 0, 1}), P({1, 1})));
  CHECK_THROWS_AS(alternating_binomial_sum(0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(alternating_binomial_sum(2, {}), std::invalid_argument);
}

TEST_CASE("property: depth-1 strict and non-strict sums agree") {
  for (const auto& sp : twisted_specs(4)) {
    if (sp.depth() != 1) continue;
    for (long n = 0; n <= 6; ++n) CHECK(h_sum(n, sp) == s_sum(n, sp));
  }
}

TEST_CASE("property: evaluators agree with brute-force enumeration") {
  for (const auto& sp : twisted_specs(4)) {
    for (long n = 0; n <= 6; ++n) {
      CHECK(h_sum(n, sp) == brute_h(n, sp));
      CHECK(s_sum(n, sp) == brute_s(n, sp));
    }
  }
  for (const auto& m : qcong::test::mixed_specs(4))
    for (long n = 0; n <= 6; ++n) CHECK(t_sum(n, m) == brute_t(n, m));
}

TEST_CASE("property: non-strict depth-2 sum is strict sum plus diagonal") {
  for (const auto& sp : twisted_specs(4)) {
    if (sp.depth() != 2) continue;
    const IndexSpec diag = IndexSpec::make({sp.s[0] + sp.s[1]}, {sp.t[0] + sp.t[1]});
    for (long n = 0; n <= 6; ++n) CHECK(s_sum(n, sp) == h_sum(n, sp) + h_sum(n, diag));
  }
}

TEST_CASE("property: ring evaluation agrees with embedding the rational value") {
  for (long p : {3L, 5L, 7L}) {
    const auto m = CycloModulus::make(p);
    for (const auto& sp : twisted_specs(p == 7 ? 5 : 4)) {
      CHECK(h_sum_mod(p, sp) == embed(h_sum(p - 1, sp), m));
      CHECK(s_sum_mod(p, sp) == embed(s_sum(p - 1, sp), m));
    }
    for (long w = 1; w <= 4; ++w) {
      for (const auto& c : compositions(w)) {
        const MixedSpec ms = MixedSpec::from_composition(c);
        CHECK(t_sum_mod(p, ms) == embed(t_sum(p - 1, ms), m));
      }
    }
  }
}

TEST_CASE("property: both T recursions") {
  for (long w = 0; w <= 4; ++w) {
    for (const auto& c : compositions(w)) {
      for (long r = 1; r <= 2; ++r) {
        const MixedSpec base = MixedSpec::from_composition(c);
        const MixedSpec ext = MixedSpec::from_composition(w == 0 ? std::vector<long>{r} : cat({c, {r}}));
        for (long n = 0; n <= 6; ++n) {
          RatFunc rhs;
          for (long k = 1; k <= n; ++k) {
            const RatFunc qk(Poly::monomial(R(1), static_cast<std::size_t>(k)), qint(k));
            if (r == 1) {
              rhs += qk * t_sum(k - 1, base);
            } else {
              const MixedSpec prev = MixedSpec::from_composition(w == 0 ? std::vector<long>{r - 1} : cat({c, {r - 1}}));
              rhs += qk * t_sum(k, prev);
            }
          }
          CHECK(t_sum(n, ext) == rhs);
        }
      }
    }
  }
}

TEST_CASE("property: depth-2 product expansion") {
  for (long a = 1; a <= 3; ++a) {
    for (long b = 1; b <= 3; ++b) {
      for (long n = 0; n <= 6; ++n) {
        RatFunc h, s;
        for (const auto& term : depth2_product_expand(a, b, SumKind::strict)) h += term.coefficient * h_sum(n, term.spec);
        for (const auto& term : depth2_product_expand(a, b, SumKind::non_strict)) s += term.coefficient * s_sum(n, term.spec);
        const IndexSpec sa = IndexSpec::with_default_twist({a}), sb = IndexSpec::with_default_twist({b});
        CHECK(h == h_sum(n, sa) * h_sum(n, sb));
        CHECK(s == s_sum(n, sa) * s_sum(n, sb));
      }
    }
  }
  const IndexSpec one = IndexSpec::with_default_twist({1});
  CHECK(h_sum(3, one) * h_sum(3, one) ==
        RatFunc(2) * h_sum(3, IndexSpec::with_default_twist({1, 1})) + h_sum(3, IndexSpec::with_default_twist({2})) +
            one_minus_q * h_sum(3, one));
}

TEST_CASE("property: profile weights scale the first index") {
  const Chain c = Chain::nonstrict_chain(IndexSpec::with_default_twist({1, 2}));
  std::vector<RatFunc> w;
  for (long k = 0; k <= 5; ++k) w.emplace_back(k);
  const auto weighted = chain_profile(RatFuncRing{}, 5, c, &w);
  RatFunc brute;
  for (long a = 1; a <= 5; ++a)
    for (long b = a; b <= 5; ++b) brute += RatFunc(a) * raw_term(a, 1, 0) * raw_term(b, 2, 1);
  CHECK(profile_total(weighted) == brute);
}

}  // TEST_SUITE
