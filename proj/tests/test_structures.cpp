// Apache License, Version 2.0, refer to LICENSE.txt

#include <catch2/catch.hpp>

#include "exparts/enumerate.hpp"
#include "exparts/group_indexing.hpp"
#include "exparts/rng.hpp"

using namespace exparts;

TEST_CASE("canonical typing cycles through the group") {
  GroupIndexing g(3, 3);
  REQUIRE(g.ground_size() == 9);
  REQUIRE(g.type_of(1) == 1);
  REQUIRE(g.type_of(5) == 2);
  REQUIRE(g.type_of(9) == 3);
  REQUIRE(g.group(2) == std::vector<int>{4, 5, 6});
}

TEST_CASE("evenness of block sizes") {
  REQUIRE(is_j_even(SetPartition::parse("1 3 5 7 8 9|2 4 6"), 3));
  REQUIRE_FALSE(is_j_even(SetPartition::parse("1|2 3 4"), 2));
  REQUIRE(is_j_even(SetPartition::single_block(6), 2));
  REQUIRE(is_j_even(SetPartition::single_block(6), 3));
  REQUIRE_THROWS_AS(is_j_even(SetPartition::single_block(5), 2), std::domain_error);
}

TEST_CASE("balance under canonical and explicit typings") {
  GroupIndexing g(3, 3);
  SetPartition example = SetPartition::parse("1 3 5 7 8 9|2 4 6");
  REQUIRE(is_j_balanced(example, g));
  // The same labels spelled out explicitly: 1,4,7 type a; 2,5,8 type b; ...
  std::vector<int> typing{1, 2, 3, 1, 2, 3, 1, 2, 3};
  REQUIRE(is_j_balanced(example, g, typing));

  GroupIndexing pairs(2, 2);
  REQUIRE(is_j_balanced(SetPartition::parse("1 2|3 4"), pairs));
  REQUIRE_FALSE(is_j_balanced(SetPartition::parse("1 3|2 4"), pairs));
  REQUIRE_THROWS_AS(is_j_balanced(SetPartition::single_block(6), pairs), std::domain_error);
  REQUIRE_THROWS_AS(is_j_balanced(SetPartition::parse("1 2|3 4"), pairs, {1, 1, 1, 2}),
                    std::domain_error);
}

TEST_CASE("balanced assembly follows the copy embedding") {
  GroupIndexing g(2, 2);
  std::vector<Permutation> identity{Permutation::identity(2)};
  REQUIRE(assemble_balanced(SetPartition::single_block(2), identity, g) ==
          SetPartition::single_block(4));
  REQUIRE(assemble_balanced(SetPartition::singletons(2), identity, g) ==
          SetPartition::parse("1 2|3 4"));
  std::vector<Permutation> swapped{Permutation({2, 1})};
  REQUIRE(assemble_balanced(SetPartition::singletons(2), swapped, g) ==
          SetPartition::parse("1 4|2 3"));
  REQUIRE_THROWS_AS(assemble_balanced(SetPartition::singletons(2), {}, g), std::domain_error);
  REQUIRE_THROWS_AS(
      assemble_balanced(SetPartition::singletons(3), identity, g), std::domain_error);
}

TEST_CASE("even assembly pushes groups through the permutation") {
  GroupIndexing g(2, 2);
  REQUIRE(assemble_even(SetPartition::single_block(2), Permutation::identity(4), g) ==
          SetPartition::single_block(4));
  REQUIRE(assemble_even(SetPartition::singletons(2), Permutation::identity(4), g) ==
          SetPartition::parse("1 2|3 4"));
  REQUIRE(assemble_even(SetPartition::singletons(2), Permutation({1, 3, 2, 4}), g) ==
          SetPartition::parse("1 3|2 4"));
  REQUIRE_THROWS_AS(assemble_even(SetPartition::singletons(2), Permutation::identity(3), g),
                    std::domain_error);
}

TEST_CASE("assembled partitions always satisfy their structural predicate") {
  RngHandle rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.uniform_below(4));
    int j = 1 + static_cast<int>(rng.uniform_below(3));
    GroupIndexing g(n, j);
    auto partitions = enumerate_partitions(n);
    const SetPartition& pi = partitions[rng.uniform_below(partitions.size())];
    std::vector<Permutation> matchings;
    for (int k = 2; k <= j; ++k) matchings.emplace_back(rng.uniform_permutation_image(n));
    REQUIRE(is_j_balanced(assemble_balanced(pi, matchings, g), g));
    Permutation sigma(rng.uniform_permutation_image(g.ground_size()));
    REQUIRE(is_j_even(assemble_even(pi, sigma, g), j));
  }
}
