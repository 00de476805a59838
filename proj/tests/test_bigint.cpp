#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "gctlab/bigint.hpp"
#include "gctlab/rational.hpp"

using gctlab::Integer;
using gctlab::Rational;

TEST_CASE("small values round-trip through strings") {
  for (long long v : {0LL, 1LL, -1LL, 42LL, -9999999LL, 4294967295LL,
                      4294967296LL, -4294967297LL}) {
    CHECK(Integer(v).str() == std::to_string(v));
    CHECK(Integer::from_string(std::to_string(v)) == Integer(v));
    CHECK(Integer(v).to_int64() == v);
  }
  CHECK(Integer(std::numeric_limits<long long>::min()).to_int64() ==
        std::numeric_limits<long long>::min());
  CHECK(Integer(std::numeric_limits<long long>::max()).to_int64() ==
        std::numeric_limits<long long>::max());
}

TEST_CASE("arithmetic agrees with 64-bit on random operands") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long long> dist(-3000000000LL, 3000000000LL);
  for (int i = 0; i < 3000; ++i) {
    long long a = dist(rng), b = dist(rng);
    CHECK(Integer(a) + Integer(b) == Integer(a + b));
    CHECK(Integer(a) - Integer(b) == Integer(a - b));
    CHECK(Integer(a) * Integer(b) == Integer(a * b));
    if (b != 0) {
      auto dm = Integer(a).divmod(Integer(b));
      CHECK(dm.quot == Integer(a / b));
      CHECK(dm.rem == Integer(a % b));
    }
    CHECK((Integer(a) < Integer(b)) == (a < b));
  }
}

TEST_CASE("known factorials and binomials") {
  CHECK(Integer::factorial(20).str() == "2432902008176640000");
  CHECK(Integer::factorial(32).str() == "263130836933693530167218012160000000");
  // C(59,5), the largest multiset count the plethysm oracle touches
  CHECK(Integer::binomial(Integer(59), 5) == Integer(5006386));
  CHECK(Integer::binomial(Integer(12377), 2) == Integer(76588876LL));
  // (a+b)! / (a! b!) is always integral: exercises exact_div
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b) {
      Integer lhs = Integer::factorial(a + b)
                        .exact_div(Integer::factorial(a))
                        .exact_div(Integer::factorial(b));
      CHECK(lhs == Integer::binomial(Integer(a + b), a));
    }
}

TEST_CASE("exact division refuses inexact input") {
  CHECK_THROWS_AS(Integer(10).exact_div(Integer(3)),
                  gctlab::verification_error);
  CHECK(Integer(-24).exact_div(Integer(6)) == Integer(-4));
}

TEST_CASE("gcd and wide products") {
  CHECK(Integer::gcd(Integer(0), Integer(7)) == Integer(7));
  CHECK(Integer::gcd(Integer(-12), Integer(18)) == Integer(6));
  Integer big = Integer::factorial(30);
  CHECK(big.exact_div(Integer::factorial(29)) == Integer(30));
  CHECK((big * big).exact_div(big) == big);
  CHECK_FALSE(big.fits_int64());
}

TEST_CASE("rationals normalize and detect integrality") {
  Rational r(Integer(6), Integer(-4));
  CHECK(r.num() == Integer(-3));
  CHECK(r.den() == Integer(2));
  Rational sum = r + Rational(Integer(3), Integer(2));
  CHECK(sum.is_zero());
  Rational third(Integer(1), Integer(3));
  Rational one = third + third + third;
  CHECK(one.is_integer());
  CHECK(one.to_integer() == Integer(1));
  CHECK_THROWS_AS(third.to_integer(), gctlab::verification_error);
  CHECK((Rational(Integer(5), Integer(10)) * Rational(Integer(2), Integer(1)))
            .to_integer() == Integer(1));
}
