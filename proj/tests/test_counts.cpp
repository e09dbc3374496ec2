// Apache License, Version 2.0, refer to LICENSE.txt

#include <catch2/catch.hpp>

#include "exparts/enumerate.hpp"
#include "exparts/integer_partition.hpp"
#include "exparts/rational.hpp"

using namespace exparts;

TEST_CASE("rising factorial") {
  REQUIRE(rising_factorial(make_rational(2), 3) == make_rational(24));
  REQUIRE(rising_factorial(make_rational(7, 3), 0) == make_rational(1));
  REQUIRE(rising_factorial(make_rational(1, 2), 2) == make_rational(3, 4));
}

TEST_CASE("per-block factor of the two-parameter law") {
  Rational alpha = make_rational(2, 7);
  REQUIRE(neg_rising_block_factor(alpha, 1) == alpha);
  REQUIRE(neg_rising_block_factor(make_rational(1), 2) == 0);
  REQUIRE(neg_rising_block_factor(make_rational(1, 2), 3) == make_rational(3, 8));
  // Agrees with -(-a)^{rising k} computed the displayed way.
  for (unsigned k = 1; k <= 6; ++k)
    REQUIRE(neg_rising_block_factor(alpha, k) == -rising_factorial(-alpha, k));
  REQUIRE_THROWS_AS(neg_rising_block_factor(alpha, 0), std::domain_error);
}

TEST_CASE("multiplicity vectors validate") {
  REQUIRE(IntegerPartition::from_parts({2, 1}).part_count() == 2);
  REQUIRE(IntegerPartition::from_parts({2, 2}).multiplicity(2) == 2);
  REQUIRE_THROWS_AS(IntegerPartition(3, {1, 1, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(IntegerPartition(3, {1, 1}), std::invalid_argument);
  REQUIRE(IntegerPartition::parse("4 2 1").n() == 7);
  REQUIRE(IntegerPartition::parse("2 2").to_string() == "2 2");
}

TEST_CASE("block-size profile of a partition") {
  REQUIRE(block_sizes_to_integer_partition(SetPartition::parse("1 3|2")) ==
          IntegerPartition::from_parts({2, 1}));
  REQUIRE(block_sizes_to_integer_partition(SetPartition::single_block(5)) ==
          IntegerPartition::from_parts({5}));
  REQUIRE(block_sizes_to_integer_partition(SetPartition::parse("1 2|3 4")) ==
          IntegerPartition::from_parts({2, 2}));
}

TEST_CASE("set partition counts per profile, checked by enumeration") {
  REQUIRE(count_set_partitions_for(IntegerPartition::from_parts({2, 1})) == 3);
  REQUIRE(count_set_partitions_for(IntegerPartition::from_parts({3})) == 1);
  REQUIRE(count_set_partitions_for(IntegerPartition::from_parts({1, 1, 1})) == 1);
  for (int n = 1; n <= 7; ++n) {
    auto partitions = enumerate_partitions(n);
    for (const auto& profile : enumerate_integer_partitions(n)) {
      long direct = 0;
      for (const auto& b : partitions)
        if (block_sizes_to_integer_partition(b) == profile) ++direct;
      REQUIRE(count_set_partitions_for(profile) == direct);
    }
  }
}

TEST_CASE("permutation counts per partition") {
  REQUIRE(count_permutations_for(SetPartition::parse("1 2 3")) == 2);
  REQUIRE(count_permutations_for(SetPartition::parse("1 2|3")) == 1);
  REQUIRE(count_permutations_for(SetPartition::parse("1 2 3 4")) == 6);
  for (int n = 1; n <= 5; ++n) {
    auto perms = enumerate_permutations(n);
    for (const auto& b : enumerate_partitions(n)) {
      long direct = 0;
      for (const auto& s : perms)
        if (cycles_to_partition(s) == b) ++direct;
      REQUIRE(count_permutations_for(b) == direct);
    }
  }
}

TEST_CASE("profile counts add up to Bell numbers and factorials") {
  for (int n = 1; n <= 8; ++n) {
    BigInt partition_total = 0;
    for (const auto& profile : enumerate_integer_partitions(n))
      partition_total += count_set_partitions_for(profile);
    REQUIRE(partition_total == bell_number(n));
  }
  for (int n = 1; n <= 8; ++n) {
    BigInt perm_total = 0;
    for (const auto& b : enumerate_partitions(n)) perm_total += count_permutations_for(b);
    REQUIRE(perm_total == factorial(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("grouped class counts match their counting factors") {
  for (int order : {2, 3}) {
    for (int n = 1; n * order <= 8; ++n) {
      GroupIndexing g(n, order);
      auto even = enumerate_even(n, order);
      auto balanced = enumerate_balanced(g);
      BigInt even_total = 0, balanced_total = 0;
      for (const auto& profile : enumerate_integer_partitions(n * order, order)) {
        even_total += count_even_set_partitions_for(profile, order);
        balanced_total += count_balanced_set_partitions_for(profile, order);
      }
      REQUIRE(even_total == static_cast<long>(even.size()));
      REQUIRE(balanced_total == static_cast<long>(balanced.size()));
      // Per-profile counts as well.
      for (const auto& profile : enumerate_integer_partitions(n * order, order)) {
        long direct_even = 0, direct_balanced = 0;
        for (const auto& b : even)
          if (block_sizes_to_integer_partition(b) == profile) ++direct_even;
        for (const auto& b : balanced)
          if (block_sizes_to_integer_partition(b) == profile) ++direct_balanced;
        REQUIRE(count_even_set_partitions_for(profile, order) == direct_even);
        REQUIRE(count_balanced_set_partitions_for(profile, order) == direct_balanced);
      }
    }
  }
}

TEST_CASE("rational parsing") {
  REQUIRE(parse_rational("3/6") == make_rational(1, 2));
  REQUIRE(parse_rational("-2") == make_rational(-2));
  REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
