// Apache License, Version 2.0, refer to LICENSE.txt

#include <catch2/catch.hpp>

#include "exparts/distributions.hpp"
#include "exparts/enumerate.hpp"
#include "exparts/oracle.hpp"

using namespace exparts;

namespace {
ExactDist<SetPartition> two_param_dist(int n, const ModelParams& p) {
  return build_distribution(enumerate_partitions(n), [&](const SetPartition& b) {
    return two_param_partition_pmf(b, p).exact_or_throw();
  });
}
}  // namespace

TEST_CASE("total variation basics") {
  ModelParams p = ModelParams::two_param(make_rational(1, 2), make_rational(1));
  auto d = two_param_dist(3, p);
  REQUIRE(total_variation(d, d) == 0);

  ExactDist<SetPartition> point_a({{SetPartition::single_block(2), make_rational(1)}});
  ExactDist<SetPartition> point_b({{SetPartition::singletons(2), make_rational(1)}});
  REQUIRE(total_variation(point_a, point_b) == 1);

  ExactDist<SetPartition> mixed({{SetPartition::single_block(2), make_rational(1, 2)},
                                 {SetPartition::singletons(2), make_rational(1, 2)}});
  REQUIRE(total_variation(point_a, mixed) == make_rational(1, 2));
}

TEST_CASE("conditioning restricts and renormalizes") {
  ModelParams p = ModelParams::two_param(make_rational(1, 2), make_rational(1));
  auto d = two_param_dist(4, p);
  auto unchanged = conditioned_distribution(d, [](const SetPartition&) { return true; });
  REQUIRE(total_variation(d, unchanged) == 0);

  ExactDist<SetPartition> point({{SetPartition::single_block(2), make_rational(1)}});
  auto same = conditioned_distribution(
      point, [](const SetPartition& b) { return b.block_count() == 1; });
  REQUIRE(total_variation(point, same) == 0);

  REQUIRE_THROWS_AS(conditioned_distribution(d, [](const SetPartition&) { return false; }),
                    std::domain_error);

  auto even_only = conditioned_distribution(d, [](const SetPartition& b) { return is_j_even(b, 2); });
  REQUIRE(even_only.total_mass() == 1);
  REQUIRE(even_only.size() == 4);
}

TEST_CASE("restriction consistency of the two-parameter family") {
  for (const auto& p : {ModelParams::two_param(make_rational(1, 2), make_rational(1)),
                        ModelParams::two_param(make_rational(0), make_rational(1)),
                        ModelParams::negative_kappa(make_rational(1, 2), 3)}) {
    auto pmf = [&](const SetPartition& b) { return two_param_partition_pmf(b, p).exact_or_throw(); };
    // The two partitions of a pair sum to the unit mass of the singleton.
    REQUIRE(partition_restriction_consistency(pmf, 1).exact_match);
    for (int n = 2; n <= 4; ++n) REQUIRE(partition_restriction_consistency(pmf, n).exact_match);
  }
}

TEST_CASE("delete-and-repair consistency of the permutation family") {
  for (const Rational& a : {make_rational(1, 2), make_rational(1), make_rational(2)}) {
    auto pmf = [&](const Permutation& s) { return ewens_permutation_pmf(s, a).exact_or_throw(); };
    for (int n = 1; n <= 3; ++n) REQUIRE(permutation_delete_repair_consistency(pmf, n).exact_match);
  }
  // The rising-factorial variant is not even normalized, so it cannot be
  // consistent; the check reports a gap rather than crashing.
  auto bad = [&](const Permutation& s) {
    return rising_factorial(make_rational(1), static_cast<unsigned long>(s.cycle_count())) /
           rising_factorial(make_rational(1), static_cast<unsigned long>(s.n()));
  };
  REQUIRE_FALSE(permutation_delete_repair_consistency(bad, 2).exact_match);
}

TEST_CASE("joint families are consistent under their product maps") {
  ModelParams p = ModelParams::two_param(make_rational(1, 2), make_rational(1));
  REQUIRE(joint_balanced_consistency(GroupIndexing(1, 2), p).exact_match);
  REQUIRE(joint_balanced_consistency(GroupIndexing(2, 2), p).exact_match);
  REQUIRE(joint_even_consistency(GroupIndexing(1, 2), p).exact_match);
  REQUIRE(joint_even_consistency(GroupIndexing(2, 2), p).exact_match);
}

TEST_CASE("empirical report against the exact table") {
  ModelParams p = ModelParams::two_param(make_rational(1, 2), make_rational(1));
  auto exact = two_param_dist(2, p);
  // Exactly proportional counts: zero distance, chi-square zero.
  std::map<SetPartition, uint64_t> counts{{SetPartition::single_block(2), 250},
                                          {SetPartition::singletons(2), 750}};
  auto report = empirical_vs_exact(counts, exact);
  REQUIRE(report.tv == 0);
  REQUIRE(report.chi_square == 0.0);
  REQUIRE(report.degrees_of_freedom == 1);
  REQUIRE(report.p_value == 1.0);

  ExactDist<SetPartition> point({{SetPartition::single_block(2), make_rational(1)}});
  std::map<SetPartition, uint64_t> conforming{{SetPartition::single_block(2), 50}};
  REQUIRE(empirical_vs_exact(conforming, point).tv == 0);

  std::map<SetPartition, uint64_t> tiny{{SetPartition::single_block(2), 3}};
  REQUIRE_THROWS_AS(empirical_vs_exact(tiny, exact), std::domain_error);

  // Mass outside the support is certain failure.
  std::map<SetPartition, uint64_t> stray{{SetPartition::singletons(2), 40},
                                         {SetPartition::single_block(2), 40}};
  auto bad = empirical_vs_exact(stray, point);
  REQUIRE(bad.tv == make_rational(1, 2));
  REQUIRE(bad.p_value == 0.0);
}

TEST_CASE("exact tables serialize as ordered records") {
  ModelParams p = ModelParams::two_param(make_rational(1, 2), make_rational(1));
  auto d = two_param_dist(2, p);
  std::string records =
      serialize_records(d, [](const SetPartition& b) { return b.to_string(); });
  REQUIRE(records ==
          "{\"object\":\"1 2\",\"prob\":{\"num\":\"1\",\"den\":\"4\"}}\n"
          "{\"object\":\"1|2\",\"prob\":{\"num\":\"3\",\"den\":\"4\"}}\n");
}

TEST_CASE("chi-square tail evaluation") {
  // Q(1/2, x/2) at x = 3.841 is about 0.05 (the familiar 95% point).
  double p = detail::regularized_gamma_q(0.5, 3.841 / 2);
  REQUIRE(p == Approx(0.05).margin(0.001));
  REQUIRE(detail::regularized_gamma_q(2.0, 0.0) == 1.0);
}
