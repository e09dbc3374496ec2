// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exparts/distributions.hpp"
#include "exparts/enumerate.hpp"
#include "exparts/prob_value.hpp"
#include "exparts/rational.hpp"

namespace exparts {

template <typename T, typename U, typename Proj>
ExactDist<U> pushforward(const ExactDist<T>& dist, Proj&& proj) {
  std::map<U, Rational> table;
  for (const auto& [obj, w] : dist.entries()) table[proj(obj)] += w;
  return ExactDist<U>(std::move(table));
}

// Restrict the support to the predicate and renormalize exactly.
template <typename T, typename Pred>
ExactDist<T> conditioned_distribution(const ExactDist<T>& dist, Pred&& pred) {
  std::map<T, Rational> table;
  Rational mass = 0;
  for (const auto& [obj, w] : dist.entries()) {
    if (!pred(obj)) continue;
    table[obj] = w;
    mass += w;
  }
  if (mass == 0) throw std::domain_error("conditioning event has zero mass");
  for (auto& [obj, w] : table) w /= mass;
  return ExactDist<T>(std::move(table));
}

// (1/2) sum |p - q|, entries missing from one support counted as zero.
template <typename T>
Rational total_variation(const ExactDist<T>& p, const ExactDist<T>& q) {
  Rational sum = 0;
  for (const auto& [obj, w] : p.entries()) {
    auto other = q.weight_of(obj);
    Rational d = w - (other ? *other : Rational(0));
    sum += d < 0 ? -d : d;
  }
  for (const auto& [obj, w] : q.entries())
    if (!p.weight_of(obj)) sum += w;
  return sum / 2;
}

template <typename T>
Rational max_abs_difference(const ExactDist<T>& p, const ExactDist<T>& q) {
  Rational best = 0;
  auto consider = [&](const Rational& a, const Rational& b) {
    Rational d = a - b;
    if (d < 0) d = -d;
    if (d > best) best = d;
  };
  for (const auto& [obj, w] : p.entries()) {
    auto other = q.weight_of(obj);
    consider(w, other ? *other : Rational(0));
  }
  for (const auto& [obj, w] : q.entries())
    if (!p.weight_of(obj)) consider(w, Rational(0));
  return best;
}

// ---------------------------------------------------------------------------
// Projective-consistency checks: the size-n law must be the exact marginal of
// the size-(n+1) law under the projection.
// ---------------------------------------------------------------------------

struct ConsistencyReport {
  bool exact_match = false;
  Rational max_gap = 0;
  std::string description;
};

template <typename T, typename U, typename Proj>
ConsistencyReport marginal_consistency(const ExactDist<T>& bigger, const ExactDist<U>& smaller,
                                       Proj&& proj, std::string description) {
  ExactDist<U> pushed = pushforward<T, U>(bigger, std::forward<Proj>(proj));
  ConsistencyReport r;
  r.max_gap = max_abs_difference(pushed, smaller);
  r.exact_match = r.max_gap == 0;
  r.description = std::move(description);
  return r;
}

// Partition family under prefix restriction.
inline ConsistencyReport partition_restriction_consistency(
    const std::function<Rational(const SetPartition&)>& pmf, int n,
    const EnumerationBudget& budget = {}) {
  auto small = build_distribution(enumerate_partitions(n, budget),
                                  [&](const SetPartition& b) { return pmf(b); });
  auto big = build_distribution(enumerate_partitions(n + 1, budget),
                                [&](const SetPartition& b) { return pmf(b); });
  return marginal_consistency(
      big, small, [n](const SetPartition& b) { return b.restrict_to(n); },
      "partition law under restriction at n=" + std::to_string(n));
}

// Permutation family under delete-and-repair of the top element.
inline ConsistencyReport permutation_delete_repair_consistency(
    const std::function<Rational(const Permutation&)>& pmf, int n,
    const EnumerationBudget& budget = {}) {
  auto small = build_distribution(enumerate_permutations(n, budget),
                                  [&](const Permutation& s) { return pmf(s); });
  auto big = build_distribution(enumerate_permutations(n + 1, budget),
                                [&](const Permutation& s) { return pmf(s); });
  return marginal_consistency(
      big, small, [n](const Permutation& s) { return delete_and_repair(s, n + 1); },
      "permutation law under delete-and-repair at n=" + std::to_string(n));
}

// Product family (partition, matchings) under componentwise restriction /
// delete-and-repair.
inline ConsistencyReport joint_balanced_consistency(const GroupIndexing& g_small,
                                                    const ModelParams& params,
                                                    const EnumerationBudget& budget = {}) {
  int n = g_small.num_groups;
  int j = g_small.group_size;
  GroupIndexing g_big(n + 1, j);
  using Tuple = std::pair<SetPartition, std::vector<Permutation>>;
  auto enumerate_tuples = [&](int size) {
    std::vector<Tuple> out;
    auto partitions = enumerate_partitions(size, budget);
    auto perms = enumerate_permutations(size, budget);
    std::vector<std::vector<Permutation>> match_tuples{{}};
    for (int k = 2; k <= j; ++k) {
      std::vector<std::vector<Permutation>> next;
      for (const auto& base : match_tuples)
        for (const auto& s : perms) {
          auto copy = base;
          copy.push_back(s);
          next.push_back(std::move(copy));
        }
      match_tuples = std::move(next);
    }
    for (const auto& p : partitions)
      for (const auto& ms : match_tuples) out.emplace_back(p, ms);
    return out;
  };
  auto big_support = enumerate_tuples(n + 1);
  auto small_support = enumerate_tuples(n);
  std::map<Tuple, Rational> big_table, small_table;
  for (const auto& t : big_support)
    big_table[t] = joint_balanced_pmf(t.first, t.second, g_big, params).exact_or_throw();
  for (const auto& t : small_support)
    small_table[t] = joint_balanced_pmf(t.first, t.second, g_small, params).exact_or_throw();
  auto project = [n](const Tuple& t) {
    std::vector<Permutation> projected;
    projected.reserve(t.second.size());
    for (const auto& s : t.second) projected.push_back(delete_and_repair(s, n + 1));
    return Tuple{t.first.restrict_to(n), std::move(projected)};
  };
  return marginal_consistency(ExactDist<Tuple>(std::move(big_table)),
                              ExactDist<Tuple>(std::move(small_table)), project,
                              "joint balanced law under the product projection at n=" +
                                  std::to_string(n) + ", order " + std::to_string(j));
}

// Product family (partition, full-ground-set permutation); the permutation
// component is projected by one delete-and-repair per removed element.
inline ConsistencyReport joint_even_consistency(const GroupIndexing& g_small,
                                                const ModelParams& params,
                                                const EnumerationBudget& budget = {}) {
  int n = g_small.num_groups;
  int j = g_small.group_size;
  GroupIndexing g_big(n + 1, j);
  using Tuple = std::pair<SetPartition, Permutation>;
  auto small_partitions = enumerate_partitions(n, budget);
  auto big_partitions = enumerate_partitions(n + 1, budget);
  auto small_perms = enumerate_permutations(g_small.ground_size(), budget);
  auto big_perms = enumerate_permutations(g_big.ground_size(), budget);
  std::map<Tuple, Rational> big_table, small_table;
  for (const auto& p : big_partitions)
    for (const auto& s : big_perms)
      big_table[{p, s}] = joint_even_pmf(p, s, params).exact_or_throw();
  for (const auto& p : small_partitions)
    for (const auto& s : small_perms)
      small_table[{p, s}] = joint_even_pmf(p, s, params).exact_or_throw();
  auto project = [&](const Tuple& t) {
    Permutation s = t.second;
    for (int target = g_big.ground_size(); target > g_small.ground_size(); --target)
      s = delete_and_repair(s, target);
    return Tuple{t.first.restrict_to(n), std::move(s)};
  };
  return marginal_consistency(ExactDist<Tuple>(std::move(big_table)),
                              ExactDist<Tuple>(std::move(small_table)), project,
                              "joint even law under the product projection at n=" +
                                  std::to_string(n) + ", order " + std::to_string(j));
}

// ---------------------------------------------------------------------------
// Empirical-against-exact comparison.
// ---------------------------------------------------------------------------

namespace detail {

// Regularized upper incomplete gamma Q(a, x), series/continued-fraction
// split; the only floating-point computation in the oracle.
inline double regularized_gamma_q(double a, double x) {
  if (x < 0 || a <= 0) throw std::domain_error("invalid incomplete gamma arguments");
  if (x == 0) return 1.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
    }
    double p = sum * std::exp(-x + a * std::log(x) - lg);
    return 1.0 - p;
  }
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace detail

struct EmpiricalReport {
  uint64_t sample_count = 0;
  Rational tv = 0;          // exact, counts against exact probabilities
  double chi_square = 0.0;  // Pearson statistic
  long degrees_of_freedom = 0;
  double p_value = 1.0;
};

template <typename T>
EmpiricalReport empirical_vs_exact(const std::map<T, uint64_t>& counts,
                                   const ExactDist<T>& exact) {
  uint64_t total = 0;
  for (const auto& [obj, c] : counts) total += c;
  if (total < 10 * exact.size())
    throw std::domain_error("sample too small: need at least 10 draws per support point");
  EmpiricalReport r;
  r.sample_count = total;
  Rational total_q(static_cast<long>(total));
  Rational tv_sum = 0;
  double chi = 0.0;
  for (const auto& [obj, w] : exact.entries()) {
    auto it = counts.find(obj);
    uint64_t observed = it == counts.end() ? 0 : it->second;
    Rational freq = make_rational(BigInt(static_cast<unsigned long>(observed)),
                                  BigInt(static_cast<unsigned long>(total)));
    Rational d = freq - w;
    tv_sum += d < 0 ? -d : d;
    double expected = to_double(w) * static_cast<double>(total);
    if (expected > 0) {
      double diff = static_cast<double>(observed) - expected;
      chi += diff * diff / expected;
    }
  }
  for (const auto& [obj, c] : counts) {
    if (exact.weight_of(obj)) continue;
    // Observations outside the exact support: certain failure.
    tv_sum += make_rational(BigInt(static_cast<unsigned long>(c)),
                            BigInt(static_cast<unsigned long>(total)));
    chi = std::numeric_limits<double>::infinity();
  }
  r.tv = tv_sum / 2;
  r.chi_square = chi;
  r.degrees_of_freedom = static_cast<long>(exact.size()) - 1;
  if (std::isinf(chi))
    r.p_value = 0.0;
  else if (r.degrees_of_freedom == 0)
    r.p_value = 1.0;
  else
    r.p_value = detail::regularized_gamma_q(static_cast<double>(r.degrees_of_freedom) / 2.0,
                                            chi / 2.0);
  return r;
}

}  // namespace exparts
