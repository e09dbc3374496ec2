// Apache License, Version 2.0, refer to LICENSE.txt

#include <catch2/catch.hpp>

#include <cmath>
#include <map>

#include "exparts/distributions.hpp"
#include "exparts/enumerate.hpp"
#include "exparts/oracle.hpp"
#include "exparts/samplers.hpp"

using namespace exparts;

namespace {
const ModelParams kInterior = ModelParams::two_param(make_rational(1, 2), make_rational(1));
const ModelParams kBounded = ModelParams::negative_kappa(make_rational(1, 2), 3);
}  // namespace

TEST_CASE("rng streams are reproducible and distinct") {
  RngHandle a(42, 0), b(42, 0), c(42, 1);
  bool all_equal = true, any_diff = false;
  for (int t = 0; t < 64; ++t) {
    uint64_t va = a.next_u64();
    all_equal = all_equal && va == b.next_u64();
    any_diff = any_diff || va != c.next_u64();
  }
  REQUIRE(all_equal);
  REQUIRE(any_diff);
  RngHandle d(42, 0);
  REQUIRE_THROWS_AS(d.uniform_below(0), std::invalid_argument);
}

TEST_CASE("first element always opens a block") {
  RngHandle rng(1);
  REQUIRE(crp_sample(1, kInterior, rng) == SetPartition::singletons(1));
}

TEST_CASE("pair frequency matches the exact law within three sigma") {
  const int draws = 100'000;
  RngHandle rng(7);
  int merged = 0;
  for (int t = 0; t < draws; ++t)
    if (crp_sample(2, kInterior, rng).block_count() == 1) ++merged;
  double expect = to_double(two_param_partition_pmf(SetPartition::single_block(2), kInterior)
                                .exact_or_throw());
  double sigma = std::sqrt(expect * (1 - expect) / draws);
  REQUIRE(std::fabs(static_cast<double>(merged) / draws - expect) < 3 * sigma);
}

TEST_CASE("negative-kappa seating never exceeds the block bound") {
  RngHandle rng(3);
  for (int t = 0; t < 2000; ++t) REQUIRE(crp_sample(7, kBounded, rng).block_count() <= 3);
}

TEST_CASE("grouped samplers always emit structurally valid partitions") {
  GroupIndexing g(3, 2);
  GroupIndexing g3(2, 3);
  RngHandle rng(5);
  for (int t = 0; t < 1000; ++t) {
    REQUIRE(is_j_balanced(balanced_crp_sample(3, g, kInterior, rng).first, g));
    REQUIRE(is_j_even(even_crp_sample(3, g, kInterior, rng).first, 2));
    REQUIRE(is_j_balanced(balanced_crp_sample(2, g3, kBounded, rng).first, g3));
    REQUIRE(is_j_even(even_crp_sample(2, g3, kBounded, rng).first, 3));
  }
}

TEST_CASE("identical seeds give identical draws and traces") {
  GroupIndexing g(3, 2);
  RngHandle r1(99, 2), r2(99, 2);
  for (int t = 0; t < 50; ++t) {
    auto [p1, t1] = balanced_crp_sample(3, g, kInterior, r1);
    auto [p2, t2] = balanced_crp_sample(3, g, kInterior, r2);
    REQUIRE(p1 == p2);
    REQUIRE(t1.steps.size() == t2.steps.size());
    for (size_t s = 0; s < t1.steps.size(); ++s) {
      REQUIRE(t1.steps[s].displaced_units == t2.steps[s].displaced_units);
      REQUIRE(t1.steps[s].table == t2.steps[s].table);
    }
  }
}

TEST_CASE("traces replay to the partitions they recorded") {
  GroupIndexing g(4, 2);
  GroupIndexing g3(3, 3);
  RngHandle rng(123);
  for (int t = 0; t < 300; ++t) {
    auto balanced = balanced_crp_sample(4, g, kInterior, rng);
    REQUIRE(replay_seating_trace(balanced.second, SeatingRule::balanced) == balanced.first);
    auto even = even_crp_sample(3, g3, kBounded, rng);
    REQUIRE(replay_seating_trace(even.second, SeatingRule::even) == even.first);
  }
}

TEST_CASE("matchings of the two-step construction are uniform") {
  const int draws = 120'000;
  GroupIndexing g(3, 2);
  RngHandle rng(17);
  std::map<std::vector<int>, int> counts;
  for (int t = 0; t < draws; ++t)
    ++counts[two_step_balanced_sample(3, g, kInterior, rng).matchings[0].image()];
  REQUIRE(counts.size() == 6);
  double expect = 1.0 / 6.0;
  double sigma = std::sqrt(expect * (1 - expect) / draws);
  for (const auto& [image, c] : counts)
    REQUIRE(std::fabs(static_cast<double>(c) / draws - expect) < 3 * sigma);
}

TEST_CASE("empirical laws land near the exact tables at modest draw counts") {
  const uint64_t draws = 100'000;
  GroupIndexing g(2, 2);
  auto tv_of = [&](auto&& draw, const ExactDist<SetPartition>& exact) {
    std::map<SetPartition, uint64_t> counts;
    for (uint64_t t = 0; t < draws; ++t) ++counts[draw()];
    return to_double(empirical_vs_exact(counts, exact).tv);
  };
  {
    RngHandle rng(31);
    auto exact = build_distribution(enumerate_balanced(g), [&](const SetPartition& b) {
      return balanced_partition_pmf(b, g, kInterior).exact_or_throw();
    });
    REQUIRE(tv_of([&] { return balanced_crp_sample(2, g, kInterior, rng).first; }, exact) < 0.02);
  }
  {
    RngHandle rng(32);
    auto exact = build_distribution(enumerate_even(2, 2), [&](const SetPartition& b) {
      return even_partition_pmf(b, g, kInterior).exact_or_throw();
    });
    REQUIRE(tv_of([&] { return even_crp_sample(2, g, kInterior, rng).first; }, exact) < 0.02);
  }
  {
    RngHandle rng(33);
    auto exact = build_distribution(enumerate_even(2, 2), [&](const SetPartition& b) {
      return even_assembled_pmf(b, g, kInterior).exact_or_throw();
    });
    REQUIRE(tv_of([&] { return two_step_even_sample(2, g, kInterior, rng).assembled; }, exact) <
            0.02);
  }
}

TEST_CASE("sampler rejects invalid sizes") {
  RngHandle rng(1);
  REQUIRE_THROWS_AS(crp_sample(0, kInterior, rng), std::invalid_argument);
  GroupIndexing g(3, 2);
  REQUIRE_THROWS_AS(balanced_crp_sample(2, g, kInterior, rng), std::domain_error);
}
