#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gctlab/plethysm.hpp"
#include "gctlab/verify.hpp"
#include "oracles.hpp"

using gctlab::Integer;
using gctlab::Partition;

TEST_CASE("pinned expansions") {
  for (int d = 1; d <= 6; ++d) {
    const auto& e = gctlab::plethysm_sym_sym(d, 1);
    REQUIRE(e.entries.size() == 1);
    CHECK(e.coefficient(Partition({d})) == Integer(1));
  }
  const auto& e22 = gctlab::plethysm_sym_sym(2, 2);
  REQUIRE(e22.entries.size() == 2);
  CHECK(e22.coefficient(Partition({4})) == Integer(1));
  CHECK(e22.coefficient(Partition({2, 2})) == Integer(1));
  CHECK(e22.coefficient(Partition({3, 1})) == Integer(0));

  const auto& e23 = gctlab::plethysm_sym_sym(2, 3);
  REQUIRE(e23.entries.size() == 2);
  CHECK(e23.coefficient(Partition({6})) == Integer(1));
  CHECK(e23.coefficient(Partition({4, 2})) == Integer(1));

  // Sym^4(Sym^3) is multiplicity-free with 12 constituents
  const auto& e43 = gctlab::plethysm_sym_sym(4, 3);
  CHECK(e43.entries.size() == 12);
  CHECK(e43.coefficient(Partition({6, 4, 2})) == Integer(1));
  CHECK(e43.coefficient(Partition({12})) == Integer(1));
}

TEST_CASE("ambient occurrence") {
  CHECK(gctlab::occurs_in_ambient(Partition({4}), 2, 2));
  CHECK(gctlab::occurs_in_ambient(Partition({6}), 2, 3));
  CHECK(gctlab::occurs_in_ambient(Partition({2, 2}), 2, 2));
  CHECK_FALSE(gctlab::occurs_in_ambient(Partition({1, 1}), 1, 2));
  CHECK_FALSE(gctlab::occurs_in_ambient(Partition({3, 1}), 2, 2));
  // wrong degree is simply absent
  CHECK_FALSE(gctlab::occurs_in_ambient(Partition({3}), 2, 2));
}

TEST_CASE("agreement with the weight-multiset oracle up to 10 boxes") {
  for (int d = 1; d <= 5; ++d)
    for (int m = 1; d * m <= 10; ++m) {
      const auto& expansion = gctlab::plethysm_sym_sym(d, m);
      // the oracle never sees the power-sum route: it enumerates degree-d
      // multisets of degree-m monomials and peels leading terms
      auto weights = oracles::sym_sym_dominant_weights(d, m, d * m);
      auto expected = oracles::schur_expansion_from_weights(weights, d * m);
      REQUIRE(expansion.entries.size() == expected.size());
      for (const auto& [lambda, coeff] : expected) {
        INFO("d=", d, " m=", m, " lambda=", lambda.str());
        CHECK(expansion.coefficient(lambda) == Integer(coeff));
      }
    }
}

TEST_CASE("dimension identity and even-row law") {
  auto report = gctlab::verify_plethysm(12);
  for (const auto& check : report.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
}

TEST_CASE("ceiling and argument validation") {
  CHECK_THROWS_AS(gctlab::plethysm_sym_sym(4, 5), gctlab::resource_limit_error);
  CHECK_THROWS_AS(gctlab::plethysm_sym_sym(0, 3), gctlab::invalid_input_error);
}
