#include <doctest.h>

#include "qcong/poly.hpp"
#include "qcong/ratfunc.hpp"
#include "qcong/series.hpp"
#include "test_util.hpp"

using namespace qcong;
using qcong::test::P;
using qcong::test::PR;
using qcong::test::R;

TEST_SUITE("exact_arith") {

TEST_CASE("divmod examples") {
  auto [q1, r1] = divmod(P({1, 1, 1}), P({1, 1}));
  CHECK(q1 == P({0, 1}));
  CHECK(r1 == P({1}));

  auto [q2, r2] = divmod(Poly(), P({1, 1}));
  CHECK(q2.is_zero());
  CHECK(r2.is_zero());

  auto [q3, r3] = divmod(P({1, 1}), P({1, 1}));
  CHECK(q3 == P({1}));
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(divmod(P({1}), Poly()), std::domain_error);
}

TEST_CASE("ext_gcd examples") {
  const Poly a = P({1, 1}), b = P({1, 1, 1});
  const ExtGcd e = ext_gcd(a, b);
  CHECK(e.g == P({1}));
  CHECK(e.u * a + e.v * b == P({1}));

  CHECK(ext_gcd(P({-1, 0, 1}), P({-1, 1})).g == P({-1, 1}));

  const Poly c = PR({R(3), R(0), R(6)});
  const ExtGcd z = ext_gcd(c, Poly());
  CHECK(z.g == c.monic());
  CHECK(z.u == Poly(R(1, 6)));
  CHECK(z.v.is_zero());

  CHECK_THROWS_AS(ext_gcd(Poly(), Poly()), std::domain_error);
}

TEST_CASE("series inversion examples") {
  Series one_plus_x(std::vector<Poly>{P({1}), P({1})}, 3);
  const Series inv = one_plus_x.inverse();
  CHECK(inv.coeff(0) == P({1}));
  CHECK(inv.coeff(1) == P({-1}));
  CHECK(inv.coeff(2) == P({1}));
  CHECK(inv.coeff(3) == P({-1}));

  // (e^x - 1)/x = 1 + x/2 + x^2/6 + ...
  Series e(std::vector<Poly>{P({1}), Poly(R(1, 2)), Poly(R(1, 6))}, 2);
  const Series b = e.inverse();
  CHECK(b.coeff(0) == P({1}));
  CHECK(b.coeff(1) == Poly(R(-1, 2)));
  CHECK(b.coeff(2) == Poly(R(1, 12)));
  const Series back = e * b;
  CHECK(back.coeff(0) == P({1}));
  CHECK(back.coeff(1).is_zero());
  CHECK(back.coeff(2).is_zero());

  Series two(std::vector<Poly>{P({2})}, 0);
  CHECK(two.inverse().coeff(0) == Poly(R(1, 2)));

  Series no_unit(std::vector<Poly>{Poly(), P({1})}, 2);
  CHECK_THROWS_AS(no_unit.inverse(), std::domain_error);
  CHECK_THROWS_AS(no_unit.coeff(3), std::out_of_range);
}

TEST_CASE("generalized binomial examples") {
  CHECK(gen_binomial(7, 4) == 35);
  CHECK(gen_binomial(-2, 4) == 5);
  CHECK(gen_binomial(R(1, 2), 2) == R(-1, 8));
  CHECK(gen_binomial(3, 5) == 0);
  CHECK(gen_binomial(3, -1) == 0);
}

TEST_CASE("shifted coefficient extraction") {
  const Poly z3 = P({0, 0, 0, 1});
  CHECK(taylor_coeff(z3, R(1), 2) == 3);
  CHECK(taylor_coeff(z3, R(1), 4) == 0);
  Series unit(std::vector<Poly>{Poly(R(5, 3)), P({1})}, 4);
  CHECK(coeff_at(unit, 0) == Poly(R(5, 3)));
}

TEST_CASE("property: divmod reconstruction") {
  test::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Poly a = gen.poly(gen.integer(-1, 12));
    const Poly b = gen.poly(gen.integer(0, 12));
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("property: Bezout identity for random coprime pairs") {
  test::Gen gen(12);
  int coprime = 0;
  while (coprime < 200) {
    const Poly a = gen.poly(gen.integer(1, 8));
    const Poly b = gen.poly(gen.integer(1, 8));
    const ExtGcd e = ext_gcd(a, b);
    if (e.g != P({1})) continue;
    ++coprime;
    CHECK(e.u * a + e.v * b == P({1}));
  }
}

TEST_CASE("property: gcd recovers a planted common factor") {
  test::Gen gen(13);
  for (int i = 0; i < 100; ++i) {
    const Poly f = gen.poly(gen.integer(1, 6));
    const Poly g = gen.poly(gen.integer(0, 6));
    const Poly h = gen.poly(gen.integer(0, 6));
    const Poly d = gcd(f * g, f * h);
    // d is a monic common divisor that f divides (g, h may share more).
    CHECK(d.leading() == 1);
    CHECK(divmod(f * g, d).remainder.is_zero());
    CHECK(divmod(f * h, d).remainder.is_zero());
    CHECK(divmod(d, f.monic()).remainder.is_zero());
    // Same answer as the Bezout route.
    CHECK(d == ext_gcd(f * g, f * h).g);
  }
}

TEST_CASE("gcd of q-integer powers") {
  // [6]_q = (1+q)(1+q+q^2)(1-q+q^2); [4]_q = (1+q)(1+q^2)
  Poly q6 = P({1, 1, 1, 1, 1, 1}), q4 = P({1, 1, 1, 1});
  CHECK(gcd(pow(q6, 5), pow(q4, 3)) == pow(P({1, 1}), 3));
  CHECK(gcd(Poly(), q4) == q4);
  CHECK(gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("property: series inversion multiplies back to one") {
  test::Gen gen(14);
  for (int i = 0; i < 50; ++i) {
    const long order = gen.integer(0, 16);
    Series s(order);
    s.coeff(0) = Poly(gen.nonzero_rational());
    for (long k = 1; k <= order; ++k) s.coeff(k) = gen.poly(gen.integer(-1, 2));
    const Series prod = s * s.inverse();
    CHECK(prod.coeff(0) == P({1}));
    for (long k = 1; k <= order; ++k) CHECK(prod.coeff(k).is_zero());
  }
}

TEST_CASE("property: generalized binomial matches the factorial formula") {
  for (long n = 0; n <= 20; ++n) {
    for (long k = 0; k <= n; ++k) {
      const Integer brute = factorial(n) / (factorial(k) * factorial(n - k));
      CHECK(gen_binomial(n, k) == Rational(brute));
    }
  }
}

TEST_CASE("RatFunc normalization") {
  // (q^2 - 1)/(2q - 2) = (q + 1)/2
  const RatFunc f(P({-1, 0, 1}), P({-2, 2}));
  CHECK(f.num() == PR({R(1, 2), R(1, 2)}));
  CHECK(f.den() == P({1}));
  CHECK_THROWS_AS(RatFunc(P({1}), Poly()), std::domain_error);

  const RatFunc a(P({1}), P({1, 1}));
  const RatFunc b(P({0, 1}), P({1, 1}));
  CHECK(a + b == RatFunc(1));
  CHECK(a * RatFunc(P({1, 1})) == RatFunc(1));
  CHECK(RatFunc::q_power(-2) * RatFunc::q_power(3) == RatFunc(P({0, 1})));
  CHECK(pow(a, -2) == RatFunc(P({1, 2, 1})));
}

TEST_CASE("property: RatFunc field laws") {
  test::Gen gen(15);
  for (int i = 0; i < 60; ++i) {
    const RatFunc a(gen.poly(gen.integer(0, 4)), gen.poly(gen.integer(0, 4)));
    const RatFunc b(gen.poly(gen.integer(0, 4)), gen.poly(gen.integer(0, 4)));
    const RatFunc c(gen.poly(gen.integer(0, 4)), gen.poly(gen.integer(0, 4)));
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - b) + b == a);
    CHECK(a * b / b == a);
    CHECK(a.den().leading() == 1);
    CHECK(gcd(a.num(), a.den()).degree() <= 0);
  }
}

}  // TEST_SUITE
