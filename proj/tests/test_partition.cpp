#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gctlab/partition.hpp"
#include "oracles.hpp"

using gctlab::Partition;

TEST_CASE("construction enforces canonical form") {
  CHECK(Partition({3, 1}).height() == 2);
  CHECK(Partition({3, 1, 0, 0}).height() == 2);  // zeros stripped
  CHECK(Partition().size() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), gctlab::invalid_input_error);
  CHECK_THROWS_AS(Partition({2, -1}), gctlab::invalid_input_error);
}

TEST_CASE("text format round-trips and rejects unsorted input") {
  CHECK(Partition::parse("4,2,1") == Partition({4, 2, 1}));
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition({5, 5, 2}).str() == "5,5,2");
  CHECK(Partition::parse(Partition({9, 1}).str()) == Partition({9, 1}));
  CHECK_THROWS_AS(Partition::parse("1,2"), gctlab::invalid_input_error);
  CHECK_THROWS_AS(Partition::parse("2,,1"), gctlab::invalid_input_error);
  CHECK_THROWS_AS(Partition::parse("2,a"), gctlab::invalid_input_error);
  CHECK_THROWS_AS(Partition::parse("3,0"), gctlab::invalid_input_error);
}

TEST_CASE("conjugate matches the defining examples and is an involution") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
  for (int n = 0; n <= 20; ++n)
    for (const auto& p : gctlab::enumerate_partitions(n))
      CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("pad_columns forced examples") {
  CHECK(gctlab::pad_columns(Partition({2}), 2, 6) == Partition({4, 2}));
  CHECK(gctlab::pad_columns(Partition(), 2, 4) == Partition({2, 2}));
  CHECK(gctlab::pad_columns(Partition({2, 1}), 3, 9) == Partition({4, 3, 2}));
  CHECK_THROWS_AS(gctlab::pad_columns(Partition({2}), 2, 5),
                  gctlab::invalid_input_error);  // congruence violated
  CHECK_THROWS_AS(gctlab::pad_columns(Partition({1, 1}), 2, 6),
                  gctlab::invalid_input_error);  // height >= n
}

TEST_CASE("pad then strip is the identity on its domain") {
  for (int n = 2; n <= 4; ++n)
    for (int s = 0; s <= 6; ++s)
      for (const auto& p : gctlab::enumerate_partitions(s, n - 1))
        for (int m = p.size() == 0 ? n : p.size(); m <= p.size() + 3 * n;
             m += n) {
          Partition padded = gctlab::pad_columns(p, n, m);
          CHECK(padded.size() == m);
          CHECK(gctlab::strip_full_columns(padded, n) == p);
        }
}

TEST_CASE("sl_dual fixed points and involution") {
  CHECK(gctlab::sl_dual(Partition({1}), 2) == Partition({1}));
  CHECK(gctlab::sl_dual(Partition({2, 1}), 3) == Partition({2, 1}));
  CHECK(gctlab::sl_dual(Partition({3}), 2) == Partition({3}));
  CHECK(gctlab::sl_dual(Partition({2, 2}), 2) == Partition());
  CHECK(gctlab::sl_dual(Partition({3, 1}), 2) == Partition({2}));
  CHECK_THROWS_AS(gctlab::sl_dual(Partition({1, 1, 1}), 2),
                  gctlab::invalid_input_error);

  // involution up to SL reduction: dual(dual(p)) = p stripped of full columns
  for (int l = 1; l <= 4; ++l)
    for (int s = 0; s <= 12; ++s)
      for (const auto& p : gctlab::enumerate_partitions(s, l)) {
        Partition twice = gctlab::sl_dual(gctlab::sl_dual(p, l), l);
        CHECK(twice == gctlab::strip_full_columns(p, l));
      }
}

TEST_CASE("enumeration order, bounds and counts") {
  auto h2 = gctlab::enumerate_partitions(4, 2);
  REQUIRE(h2.size() == 3);
  CHECK(h2[0] == Partition({4}));
  CHECK(h2[1] == Partition({3, 1}));
  CHECK(h2[2] == Partition({2, 2}));

  auto zero = gctlab::enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == Partition());

  CHECK(gctlab::enumerate_partitions(6).size() == 11);

  auto counts = oracles::partition_counts(30);
  for (int n = 0; n <= 30; ++n) {
    auto all = gctlab::enumerate_partitions(n);
    CHECK(static_cast<long long>(all.size()) == counts[n]);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] > all[i + 1]);
    for (const auto& p : all) CHECK(p.size() == n);
  }
}

TEST_CASE("is_rectangle") {
  CHECK(gctlab::is_rectangle(Partition({2, 2}), 2));
  CHECK_FALSE(gctlab::is_rectangle(Partition({2, 1}), 2));
  CHECK_FALSE(gctlab::is_rectangle(Partition({3, 3, 3}), 2));
  CHECK_FALSE(gctlab::is_rectangle(Partition(), 1));
}

TEST_CASE("containment and row sums") {
  CHECK(gctlab::contains(Partition({3, 2}), Partition({2, 2})));
  CHECK_FALSE(gctlab::contains(Partition({3, 2}), Partition({2, 2, 1})));
  CHECK(gctlab::row_sum(Partition({3, 1}), Partition({2, 2})) ==
        Partition({5, 3}));
}
