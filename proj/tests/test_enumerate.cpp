// Apache License, Version 2.0, refer to LICENSE.txt

#include <catch2/catch.hpp>

#include "exparts/enumerate.hpp"

using namespace exparts;

TEST_CASE("partition enumeration counts are Bell numbers") {
  REQUIRE(enumerate_partitions(1).size() == 1);
  REQUIRE(enumerate_partitions(3).size() == 5);
  REQUIRE(enumerate_partitions(4).size() == 15);
  for (int n = 1; n <= 8; ++n)
    REQUIRE(BigInt(static_cast<long>(enumerate_partitions(n).size())) == bell_number(n));
}

TEST_CASE("enumeration runs in restricted-growth-string order") {
  auto out = enumerate_partitions(3);
  REQUIRE(out[0] == SetPartition::parse("1 2 3"));
  REQUIRE(out[1] == SetPartition::parse("1 2|3"));
  REQUIRE(out[2] == SetPartition::parse("1 3|2"));
  REQUIRE(out[3] == SetPartition::parse("1|2 3"));
  REQUIRE(out[4] == SetPartition::parse("1|2|3"));
}

TEST_CASE("even and balanced enumeration") {
  REQUIRE(enumerate_even(1, 2).size() == 1);
  auto even22 = enumerate_even(2, 2);
  REQUIRE(even22.size() == 4);

  GroupIndexing g(2, 2);
  auto balanced = enumerate_balanced(g);
  REQUIRE(balanced.size() == 3);
  REQUIRE(balanced[0] == SetPartition::single_block(4));
  REQUIRE(balanced[1] == SetPartition::parse("1 2|3 4"));
  REQUIRE(balanced[2] == SetPartition::parse("1 4|2 3"));
}

TEST_CASE("permutation enumeration") {
  REQUIRE(enumerate_permutations(1).size() == 1);
  REQUIRE(enumerate_permutations(4).size() == 24);
}

TEST_CASE("integer partition enumeration, plain and order-restricted") {
  REQUIRE(enumerate_integer_partitions(5).size() == 7);
  auto even_profiles = enumerate_integer_partitions(6, 2);
  REQUIRE(even_profiles.size() == 3);  // {6}, {4,2}, {2,2,2}
  REQUIRE_THROWS_AS(enumerate_integer_partitions(5, 2), std::domain_error);
}

TEST_CASE("budget aborts cleanly") {
  EnumerationBudget tight{10, 10};
  REQUIRE_THROWS_AS(enumerate_partitions(4, tight), budget_error);
  EnumerationBudget small_ground{1'000'000, 3};
  REQUIRE_THROWS_AS(enumerate_partitions(4, small_ground), budget_error);
  REQUIRE_NOTHROW(enumerate_partitions(3, small_ground));
}
