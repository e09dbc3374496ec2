// Apache License, Version 2.0, refer to LICENSE.txt

#include <catch2/catch.hpp>

#include "exparts/distributions.hpp"
#include "exparts/enumerate.hpp"
#include "exparts/oracle.hpp"
#include "exparts/seating_tree.hpp"

using namespace exparts;

namespace {
std::vector<ModelParams> tree_params() {
  return {ModelParams::two_param(make_rational(1, 2), make_rational(1)),
          ModelParams::two_param(make_rational(0), make_rational(1)),
          ModelParams::two_param(make_rational(1), make_rational(2)),
          ModelParams::two_param(make_rational(1, 2), make_rational(-1, 4)),
          ModelParams::negative_kappa(make_rational(1, 2), 3),
          ModelParams::negative_kappa(make_rational(1), 2)};
}
}  // namespace

TEST_CASE("a single group is a point mass under either rule") {
  for (int order : {2, 3}) {
    GroupIndexing g(1, order);
    for (auto rule : {SeatingRule::balanced, SeatingRule::even}) {
      auto dist = seating_tree_exact(1, g, ModelParams::ewens(make_rational(1)), rule);
      REQUIRE(dist.size() == 1);
      REQUIRE(dist.entries().front().first == SetPartition::single_block(order));
      REQUIRE(dist.entries().front().second == 1);
    }
  }
}

TEST_CASE("expanded balanced seating equals the closed form") {
  for (auto [n, order] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    GroupIndexing g(n, order);
    for (const auto& p : tree_params()) {
      auto tree = seating_tree_exact(n, g, p, SeatingRule::balanced);
      REQUIRE(tree.total_mass() == 1);
      auto law = build_distribution(enumerate_balanced(g), [&](const SetPartition& b) {
        return balanced_partition_pmf(b, g, p).exact_or_throw();
      });
      REQUIRE(max_abs_difference(tree, law) == 0);
    }
  }
}

TEST_CASE("expanded even seating equals the closed form") {
  for (auto [n, order] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    GroupIndexing g(n, order);
    for (const auto& p : tree_params()) {
      auto tree = seating_tree_exact(n, g, p, SeatingRule::even);
      REQUIRE(tree.total_mass() == 1);
      auto law = build_distribution(enumerate_even(n, order), [&](const SetPartition& b) {
        return even_partition_pmf(b, g, p).exact_or_throw();
      });
      REQUIRE(max_abs_difference(tree, law) == 0);
    }
  }
}

TEST_CASE("the explicit two-by-two values from the closed form") {
  GroupIndexing g(2, 2);
  ModelParams p = ModelParams::two_param(make_rational(1, 2), make_rational(1));
  auto tree = seating_tree_exact(2, g, p, SeatingRule::balanced);
  REQUIRE(*tree.weight_of(SetPartition::single_block(4)) == make_rational(1, 2));
  REQUIRE(*tree.weight_of(SetPartition::parse("1 2|3 4")) == make_rational(1, 4));
  REQUIRE(*tree.weight_of(SetPartition::parse("1 4|2 3")) == make_rational(1, 4));
  auto even_tree = seating_tree_exact(2, g, p, SeatingRule::even);
  REQUIRE(*even_tree.weight_of(SetPartition::single_block(4)) == make_rational(1, 2));
  REQUIRE(*even_tree.weight_of(SetPartition::parse("1 3|2 4")) == make_rational(1, 6));
}

TEST_CASE("seating tree respects the enumeration budget") {
  GroupIndexing g(4, 3);
  EnumerationBudget tiny{5, 20};
  REQUIRE_THROWS_AS(
      seating_tree_exact(4, g, ModelParams::ewens(make_rational(1)), SeatingRule::even, tiny),
      budget_error);
  EnumerationBudget small_ground{1'000'000, 4};
  REQUIRE_THROWS_AS(
      seating_tree_exact(4, g, ModelParams::ewens(make_rational(1)), SeatingRule::even,
                         small_ground),
      budget_error);
}
