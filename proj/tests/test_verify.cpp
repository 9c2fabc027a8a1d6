#include <doctest.h>

#include "qcong/q_objects.hpp"
#include "qcong/qmhs.hpp"
#include "qcong/special_seq.hpp"
#include "qcong/verify.hpp"
#include "test_util.hpp"

using namespace qcong;
using qcong::test::P;
using qcong::test::R;

namespace {

CheckReport run(const std::string& id, Params ps) { return run_cell({id, std::move(ps)}); }

// c (1-q)^e reduced mod [p]_q, built from the polynomial (1-q)^e directly.
CycloElement omq_times(long p, const Rational& c, unsigned e) {
  return reduce(pow(P({1, -1}), e) * c, CycloModulus::make(p));
}

// (1/p)(prod_{i=t+1}^{2t+1} (p-i) + (-1)^t (2t+1)!/t!)
Rational twos_factor_oracle(long p, long t) {
  Rational prod(1);
  for (long i = t + 1; i <= 2 * t + 1; ++i) prod *= Rational(p - i);
  const Rational tail = Rational(factorial(static_cast<unsigned>(2 * t + 1))) / Rational(factorial(static_cast<unsigned>(t)));
  return (prod + (t % 2 ? -tail : tail)) / Rational(p);
}

GridConfig small_config() {
  GridConfig c;
  c.primes = {5, 7};
  c.max_n = 4;
  c.max_weight = 3;
  c.max_t = 4;
  c.max_r_12 = 4;
  c.max_r_23 = 5;
  c.random_specs = 4;
  c.cl_max_p = 5;
  c.cl_max_s = 2;
  return c;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("registry basics") {
  const auto ids = check_ids();
  CHECK(ids.size() > 40);
  CHECK(has_check("depth1.harmonic_twisted"));
  CHECK_FALSE(has_check("depth1.nothing"));
  CHECK_THROWS_AS(run("no.such.check", {{"p", 5}}), std::invalid_argument);
  CHECK_THROWS_AS(run("depth1.twist_one", {{"p", 5}}), std::invalid_argument);
  CHECK_THROWS_AS(run("depth1.twist_one", {{"p", 9}, {"n", 1}}), std::invalid_argument);
}

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("depth1.*", "depth1.twist_one"));
  CHECK_FALSE(glob_match("depth1.*", "homog.twos_strict"));
  CHECK(glob_match("*.twos_*", "homog.twos_strict"));
  CHECK(glob_match("cl.?lain", "cl.plain"));
  CHECK_FALSE(glob_match("cl.?", "cl.plain"));
  CHECK(glob_match("", ""));
  CHECK_FALSE(glob_match("", "x"));
  const auto sel = select_checks({"cl.*", "conj.cyclic12"});
  CHECK(sel == std::vector<std::string>{"cl.plain", "cl.tilde", "conj.cyclic12"});
}

TEST_CASE("params helpers") {
  Params ps{{"p", 7}};
  push_vector(ps, "s", {3, 1, 2});
  push_vector(ps, "d", {0, 4}, true);
  CHECK(param_vector(ps, "s") == std::vector<long>{3, 1, 2});
  CHECK(param_vector(ps, "d") == std::vector<long>{0, 4});
  CHECK(param_vector(ps, "x").empty());
  CHECK(params_to_string(ps) == "p=7,s1=3,s2=1,s3=2,d0=0,d1=4");
  CHECK(param(ps, "p") == 7);
  CHECK_THROWS_AS(param(ps, "q"), std::invalid_argument);
}

TEST_CASE("depth-one examples") {
  // p = 3: H_2(1;1) = -(1-q).
  CHECK(h_sum_mod(3, IndexSpec::make({1}, {1})) == omq_times(3, R(-1), 1));
  CHECK(run("depth1.harmonic_twisted", {{"p", 3}}).status == Status::pass);
  // p = 5: H_4(2;1) = -2(1-q)^2, computed through Q(q) then reduced.
  const CycloElement expect = omq_times(5, R(-2), 2);
  CHECK(embed(h_sum(4, IndexSpec::make({2}, {1})), CycloModulus::make(5)) == expect);
  const auto sp = run("depth1.square_twisted", {{"p", 5}});
  CHECK(sp.status == Status::pass);
  CHECK(sp.rhs == expect.to_string());
  const auto hs = run("depth1.general_twist", {{"p", 5}, {"n", 2}, {"t", 1}});
  CHECK(hs.status == Status::pass);
  CHECK(hs.lhs == sp.lhs);
  CHECK(run("depth1.square_untwisted", {{"p", 3}}).status == Status::hypothesis_violated);
  CHECK(run("depth1.general_twist", {{"p", 3}, {"n", 2}, {"t", 1}}).status == Status::hypothesis_violated);
}

TEST_CASE("repeated-string examples") {
  // p = 3, t = 2: both sides reduce to -q.
  const auto r = run("repeated.ones", {{"p", 3}, {"t", 2}});
  CHECK(r.status == Status::pass);
  CHECK(r.lhs == P({0, -1}).to_string());
  const auto empty = run("repeated.ones", {{"p", 5}, {"t", 0}});
  CHECK(empty.status == Status::pass);
  CHECK(empty.lhs == P({1}).to_string());
  CHECK(run("repeated.ones", {{"p", 5}, {"t", 5}}).status == Status::hypothesis_violated);
  CHECK(run("repeated.twos_shape", {{"p", 5}, {"t", 1}}).status == Status::pass);
}

TEST_CASE("property: repeated-twos factor equals its closed form") {
  for (long t = 1; t <= 3; ++t)
    for (long p : {5L, 7L, 11L, 13L}) {
      if (p <= t) continue;
      const auto f = repeated_twos_factor(p, t);
      REQUIRE(f.has_value());
      CHECK(*f == twos_factor_oracle(p, t));
    }
  // Interpolating the oracle itself: monic of degree t in p.
  for (long t = 1; t <= 3; ++t) {
    std::vector<std::pair<Rational, Rational>> nodes;
    for (long p = t + 2; static_cast<long>(nodes.size()) < t + 2; ++p)
      if (is_prime(p)) nodes.emplace_back(R(p), twos_factor_oracle(p, t));
    const Poly fit = lagrange_interpolate(nodes);
    CHECK(fit.degree() == t);
    CHECK(fit.leading() == R(1));
  }
}

TEST_CASE("homogeneous and quasi examples") {
  const auto cc2 = run("homog.twos_strict", {{"p", 5}, {"t", 1}});
  CHECK(cc2.status == Status::pass);
  CHECK(cc2.rhs == omq_times(5, R(-2), 2).to_string());
  const auto s1 = run("homog.ones_nonstrict", {{"p", 5}, {"t", 1}});
  CHECK(s1.status == Status::pass);
  CHECK(s1.rhs == omq_times(5, R(2), 1).to_string());
  CHECK(run("homog.threes_strict", {{"p", 7}, {"t", 2}}).status == Status::pass);

  const auto cc1 = run("quasi.ones_two_strict", {{"p", 5}, {"a", 0}, {"b", 0}});
  CHECK(cc1.status == Status::pass);
  CHECK(cc1.rhs == omq_times(5, R(-4), 2).to_string());
  CHECK(run("quasi.ones_two_strict", {{"p", 7}, {"a", 1}, {"b", 0}}).status == Status::pass);
  CHECK(run("quasi.twos_three_strict", {{"p", 11}, {"a", 0}, {"b", 0}}).status == Status::pass);
  CHECK(run("quasi.twos_three_strict", {{"p", 3}, {"a", 0}, {"b", 0}}).status == Status::hypothesis_violated);
}

TEST_CASE("structural examples") {
  Params rev{{"p", 5}};
  push_vector(rev, "s", {1, 2});
  push_vector(rev, "t", {0, 1});
  CHECK(run("struct.reversal_strict", rev).status == Status::pass);

  const auto gen = run("struct.generating_product", {{"p", 3}});
  CHECK(gen.status == Status::pass);
  CHECK(gen.rhs == "[1];[1];[1/3]");

  Params c3{{"p", 7}, {"a", 2}, {"b", 2}};
  CHECK(run("struct.nonstrict_duality_pair", c3).status == Status::pass);
}

TEST_CASE("identity examples") {
  // n = 2, s = 1: both sides (-q-2q^2)/(1+q).
  const auto d = run("ident.divisor_sum", {{"n", 2}, {"s", 1}});
  CHECK(d.status == Status::pass);
  CHECK(d.lhs == RatFunc(P({0, -1, -2}), P({1, 1})).to_string());
  for (long j = 1; j <= 4; ++j) CHECK(run("ident.qbin_top_sum", {{"n", j}, {"j", j}}).status == Status::pass);
  Params de{{"n", 4}};
  push_vector(de, "s", {2, 1});
  CHECK(run("ident.strict_to_mixed", de).status == Status::pass);
}

TEST_CASE("binomial transform inverse with exponent C(n-k,2) is off by q^C(n,2)") {
  Params ps{{"n", 3}, {"seed", 0}};
  const auto literal = run("ident.binomial_transform", ps);
  CHECK(literal.status == Status::fail);
  CHECK(literal.lhs == P({0, 0, 0, 1}).to_string() + "/" + P({1}).to_string());
  CHECK(run("ident.binomial_transform_normalized", ps).status == Status::pass);
  CHECK(run("ident.binomial_transform", {{"n", 1}, {"seed", 2}}).status == Status::pass);
}

TEST_CASE("combinatorial lemma examples") {
  const auto t = run("cl.plain", {{"p", 5}, {"s", 1}, {"delta", 0}});
  CHECK(t.status == Status::pass);
  CHECK(t.lhs == "35");
  const auto z = run("cl.plain", {{"p", 3}, {"s", 1}, {"delta", 1}});
  CHECK(z.status == Status::pass);
  CHECK(z.lhs == "0");
  const auto tt = run("cl.tilde", {{"p", 5}, {"s", 1}, {"delta", 0}});
  CHECK(tt.status == Status::pass);
  CHECK(tt.lhs == "-70");
  CHECK(run("cl.plain", {{"p", 4}, {"s", 2}, {"delta", 1}}).status == Status::pass);
}

TEST_CASE("cyclic sums") {
  CHECK(cyclic_string(12, {1, 0, 2}, 0) == std::vector<long>{1, 2, 2, 1, 1});
  CHECK(cyclic_string(12, {1, 0, 2}, 1) == std::vector<long>{2, 1, 1, 2, 1});
  CHECK(cyclic_string(23, {1, 0}, 0) == std::vector<long>{2, 3});
  CHECK(cyclic_weight(12, {1, 0, 2}) == 7);
  CHECK(cyclic_weight(23, {1, 2}) == 9);
  CHECK_THROWS_AS(cyclic_string(13, {0}, 0), std::invalid_argument);

  const auto five = conjecture_check(5, 12, {0, 0});
  CHECK(five.report.status == Status::pass);
  CHECK(five.report.lhs == omq_times(5, R(-4), 2).to_string());
  CHECK(conjecture_check(5, 12, {2, 1}).report.status == Status::hypothesis_violated);
  CHECK(conjecture_check(11, 12, {1, 0, 1}).report.status == Status::pass);

  // t = 1 of the 1/2 family is the same ring element as the quasi sum.
  const auto cyc = cyclic_sum(7, 12, {1, 0});
  const auto direct = h_sum_mod(7, IndexSpec::with_default_twist({1, 2})) + h_sum_mod(7, IndexSpec::with_default_twist({2, 1}));
  CHECK(cyc == direct);
  CHECK(run("quasi.ones_two_strict", {{"p", 7}, {"a", 1}, {"b", 0}}).lhs == cyc.to_string());

  // All-zero 2/3 vector: constant equals the threes closed form times p.
  const auto flat = conjecture_check(7, 23, {0, 0});
  REQUIRE(flat.constant.has_value());
  CHECK(flat.constant->value == (gen_binomial(10, 5) + gen_binomial(-4, 5)) / R(7));
  CHECK(flat.constant->r == 3);
}

TEST_CASE("property: cyclic constants are rotation invariant") {
  for (long p : {7L, 11L, 13L})
    for (const std::vector<long>& d : {std::vector<long>{1, 0}, {2, 0, 1}, {0, 1, 0}, {1, 1, 0}}) {
      if (p <= cyclic_weight(23, d) + 1) continue;
      const auto base = conjecture_check(p, 23, d);
      REQUIRE(base.constant.has_value());
      auto rot = d;
      for (std::size_t k = 1; k < d.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        const auto other = conjecture_check(p, 23, rot);
        REQUIRE(other.constant.has_value());
        CHECK(other.constant->value == base.constant->value);
      }
    }
}

TEST_CASE("property: report order does not depend on worker count") {
  const auto cells = build_grid(select_checks({"depth1.*", "repeated.ones", "struct.reversal_*", "cl.*", "conj.*"}),
                                small_config());
  REQUIRE(cells.size() > 50);
  const auto one = run_cells(cells, 1);
  const auto many = run_cells(cells, 4);
  REQUIRE(one.size() == cells.size());
  REQUIRE(many.size() == cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(one[i].check_id == cells[i].check_id);
    CHECK(one[i].params == cells[i].params);
    CHECK(many[i].check_id == one[i].check_id);
    CHECK(many[i].params == one[i].params);
    CHECK(many[i].status == one[i].status);
    CHECK(many[i].lhs == one[i].lhs);
    CHECK(many[i].rhs == one[i].rhs);
  }
}

TEST_CASE("run_cells turns exceptions into failed reports") {
  const auto out = run_cells({{"depth1.twist_one", {{"p", 5}}}, {"depth1.harmonic_untwisted", {{"p", 5}}}}, 2);
  CHECK(out[0].status == Status::fail);
  CHECK(out[0].lhs.rfind("error:", 0) == 0);
  CHECK(out[1].status == Status::pass);
}

}  // TEST_SUITE
