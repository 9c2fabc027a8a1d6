#include <doctest.h>

#include <array>

#include "qcong/special_seq.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace qcong;
using qcong::test::P;
using qcong::test::PR;
using qcong::test::R;
using qcong::test::k_closed;

namespace {

constexpr std::array<long, 5> kPrimes{3, 5, 7, 11, 13};

}  // namespace

TEST_SUITE("special_seq") {

TEST_CASE("classical sequence examples") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == R(-1, 2));
  CHECK(bernoulli(2) == R(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == R(-691, 2730));
  CHECK(bernoulli2(2) == R(-1, 6));
  CHECK(bernoulli2(1) == R(1, 2));
  CHECK(stirling1(3, 2) == -3);
  CHECK(stirling1(3, 1) == 2);
  CHECK(stirling1(3, 3) == 1);
  CHECK(stirling1(0, 0) == 1);
  CHECK_THROWS_AS(stirling1(3, 4), std::out_of_range);
  CHECK_THROWS_AS(stirling1(-1, 0), std::out_of_range);
}

TEST_CASE("degenerate Bernoulli examples") {
  CHECK(degen_bernoulli(0).value == P({1}));
  CHECK(degen_bernoulli(1).value == PR({R(-1, 2), R(1, 2)}));
  CHECK(degen_bernoulli(2).value.eval(R(0)) == R(1, 6));
}

TEST_CASE("property: degenerate Bernoulli limit is B_n") {
  for (long n = 0; n <= 12; ++n) CHECK(degen_bernoulli(n).value.eval(R(0)) == bernoulli(n));
}

TEST_CASE("K_n(p) examples, all three routes") {
  CHECK(k_gf(0, 5) == -1);
  CHECK(k_gf(2, 5) == -2);
  CHECK(k_gf(4, 7) == 2);
  CHECK(k_bernoulli_stirling(2, 5) == -2);
  CHECK(k_bernoulli_stirling(3, 5) == -1);
  CHECK(k_bernoulli_stirling(5, 7) == 4);
  CHECK(k_via_degen(1, 5) == -2);
  CHECK(k_via_degen(0, 11) == -1);
  CHECK(k_via_degen(4, 7) == 2);
  CHECK_THROWS_AS(k_bernoulli_stirling(1, 5), std::domain_error);
}

TEST_CASE("property: K_n(p) matches the closed forms for n <= 5") {
  for (long p : kPrimes) {
    for (long n = 0; n <= 5; ++n) CHECK(k_gf(n, p) == k_closed(n, p));
  }
}

TEST_CASE("property: triple agreement of the K routes") {
  for (long p : kPrimes) {
    for (long n = 2; n <= 12; ++n) {
      const Rational gf = k_gf(n, p);
      CHECK(k_bernoulli_stirling(n, p) == gf);
      CHECK(k_via_degen(n, p) == gf);
    }
  }
}

TEST_CASE("property: K_n is a polynomial in p^2 vanishing at p^2 = 1") {
  const std::array<long, 10> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (long n = 2; n <= 12; ++n) {
    const std::size_t count = static_cast<std::size_t>(n / 2 + 2);
    const Poly k = k_interpolated_in_p2(n, std::span<const long>(primes.data(), count));
    CHECK(k.degree() <= n / 2);
    CHECK(k.eval(R(1)) == 0);
    // Off-node consistency at a further prime.
    CHECK(k.eval(Rational(37 * 37)) == k_gf(n, 37));
  }
}

TEST_CASE("K table") {
  const auto rows = k_table(7, 5);
  REQUIRE(rows.size() == 6);
  CHECK(rows.back().n == 5);
  CHECK(rows.back().value == 4);
}

}  // TEST_SUITE
