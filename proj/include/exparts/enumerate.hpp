// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "exparts/group_indexing.hpp"
#include "exparts/integer_partition.hpp"
#include "exparts/permutation.hpp"
#include "exparts/rational.hpp"
#include "exparts/set_partition.hpp"

namespace exparts {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Guard rails for exhaustive runs; enumeration aborts cleanly when exceeded.
struct EnumerationBudget {
  long max_objects = 1'000'000;
  int max_ground_set = 10;

  void check_ground_set(int n) const {
    if (n > max_ground_set)
      throw budget_error("ground set of size " + std::to_string(n) +
                         " exceeds the enumeration budget (" + std::to_string(max_ground_set) + ")");
  }
  void check_count(long produced) const {
    if (produced > max_objects)
      throw budget_error("enumeration exceeds the object budget (" + std::to_string(max_objects) + ")");
  }
};

inline BigInt bell_number(int n) {
  // Bell triangle.
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

// All partitions of [n] in restricted-growth-string order.
template <typename Fn>
void for_each_partition(int n, const EnumerationBudget& budget, Fn&& visit) {
  if (n < 1) throw std::invalid_argument("partition ground set must be non-empty");
  budget.check_ground_set(n);
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<size_t>(n), 0);
  long produced = 0;
  while (true) {
    budget.check_count(++produced);
    visit(rgs);
    int i = n - 1;
    while (i > 0) {
      if (rgs[static_cast<size_t>(i)] <= prefix_max[static_cast<size_t>(i - 1)]) break;
      --i;
    }
    if (i == 0) return;
    ++rgs[static_cast<size_t>(i)];
    prefix_max[static_cast<size_t>(i)] =
        std::max(prefix_max[static_cast<size_t>(i - 1)], rgs[static_cast<size_t>(i)]);
    for (int t = i + 1; t < n; ++t) {
      rgs[static_cast<size_t>(t)] = 0;
      prefix_max[static_cast<size_t>(t)] = prefix_max[static_cast<size_t>(t - 1)];
    }
  }
}

inline std::vector<SetPartition> enumerate_partitions(int n, const EnumerationBudget& budget = {}) {
  std::vector<SetPartition> out;
  for_each_partition(n, budget, [&](const std::vector<int>& rgs) {
    out.push_back(SetPartition::from_rgs(rgs));
  });
  return out;
}

inline std::vector<SetPartition> enumerate_even(int num_groups, int order,
                                                const EnumerationBudget& budget = {}) {
  std::vector<SetPartition> out;
  for_each_partition(num_groups * order, budget, [&](const std::vector<int>& rgs) {
    SetPartition p = SetPartition::from_rgs(rgs);
    if (is_j_even(p, order)) out.push_back(std::move(p));
  });
  return out;
}

inline std::vector<SetPartition> enumerate_balanced(int num_groups, const GroupIndexing& g,
                                                    const EnumerationBudget& budget = {}) {
  if (g.num_groups != num_groups) throw std::domain_error("group count mismatch");
  std::vector<SetPartition> out;
  for_each_partition(g.ground_size(), budget, [&](const std::vector<int>& rgs) {
    SetPartition p = SetPartition::from_rgs(rgs);
    if (is_j_balanced(p, g)) out.push_back(std::move(p));
  });
  return out;
}

inline std::vector<SetPartition> enumerate_balanced(const GroupIndexing& g,
                                                    const EnumerationBudget& budget = {}) {
  return enumerate_balanced(g.num_groups, g, budget);
}

inline std::vector<Permutation> enumerate_permutations(int n, const EnumerationBudget& budget = {}) {
  budget.check_ground_set(n);
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i;
  std::vector<Permutation> out;
  long produced = 0;
  do {
    budget.check_count(++produced);
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// All integer partitions of n, optionally restricted to part sizes that are
// multiples of `order`.
inline std::vector<IntegerPartition> enumerate_integer_partitions(int n, int order = 1) {
  if (order < 1 || n % order != 0)
    throw std::domain_error("order must divide the partitioned number");
  std::vector<IntegerPartition> out;
  std::vector<int> parts;
  auto descend = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(IntegerPartition::from_parts(parts));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= order; --p) {
      if (p % order != 0) continue;
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  descend(descend, n, n);
  return out;
}

}  // namespace exparts
