// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <map>
#include <vector>

#include "exparts/enumerate.hpp"
#include "exparts/group_indexing.hpp"
#include "exparts/model_params.hpp"
#include "exparts/prob_value.hpp"
#include "exparts/rational.hpp"
#include "exparts/samplers.hpp"
#include "exparts/set_partition.hpp"

namespace exparts {

namespace detail {

// Expands every random choice of the grouped seating process with exact
// rational probabilities.  This is the ground truth the closed-form grouped
// laws are checked against.
class SeatingTreeExpander {
 public:
  SeatingTreeExpander(int num_groups, const GroupIndexing& g, const ModelParams& params,
                      SeatingRule rule, const EnumerationBudget& budget)
      : num_groups_(num_groups), g_(g), params_(params), rule_(rule), budget_(budget) {
    budget_.check_ground_set(g.ground_size());
  }

  std::map<SetPartition, Rational> run() {
    int ground = g_.ground_size();
    unit_at_.resize(static_cast<size_t>(ground));
    pos_of_.resize(static_cast<size_t>(ground));
    for (int p = 1; p <= ground; ++p) {
      unit_at_[static_cast<size_t>(p - 1)] = p;
      pos_of_[static_cast<size_t>(p - 1)] = p;
    }
    std::vector<int> first(static_cast<size_t>(g_.group_size));
    for (int t = 0; t < g_.group_size; ++t) first[static_cast<size_t>(t)] = t + 1;
    position_blocks_.push_back(std::move(first));
    expand_round(1, Rational(1));
    return std::move(table_);
  }

 private:
  void expand_round(int seated_groups, const Rational& prob) {
    if (seated_groups == num_groups_) {
      record(prob);
      return;
    }
    expand_swaps(seated_groups, 2, prob);
  }

  void expand_swaps(int seated_groups, int i, const Rational& prob) {
    int j = g_.group_size;
    if (i > j) {
      expand_table(seated_groups, prob);
      return;
    }
    int arriver = seated_groups * j + i;
    if (rule_ == SeatingRule::balanced) {
      Rational branch = prob / (seated_groups + 1);
      for (int c = 0; c <= seated_groups; ++c) {
        int partner = c * j + i;
        swap_units(arriver, partner);
        expand_swaps(seated_groups, i + 1, branch);
        swap_units(arriver, partner);
      }
    } else {
      int pool = seated_groups * j + i - 1;
      Rational branch = prob / pool;
      for (int partner = 1; partner <= pool; ++partner) {
        swap_units(arriver, partner);
        expand_swaps(seated_groups, i + 1, branch);
        swap_units(arriver, partner);
      }
    }
  }

  void expand_table(int seated_groups, const Rational& prob) {
    int j = g_.group_size;
    int seated_elements = seated_groups * j;
    Rational denom = Rational(seated_elements) + params_.theta();
    for (size_t t = 0; t < position_blocks_.size(); ++t) {
      Rational w = Rational(static_cast<long>(position_blocks_[t].size())) - params_.alpha();
      if (w == 0) continue;
      size_t old_size = position_blocks_[t].size();
      append_arrivals(t, seated_groups);
      expand_round(seated_groups + 1, prob * w / denom);
      position_blocks_[t].resize(old_size);
    }
    Rational open =
        params_.theta() + params_.alpha() * static_cast<long>(position_blocks_.size());
    if (open > 0) {
      position_blocks_.emplace_back();
      append_arrivals(position_blocks_.size() - 1, seated_groups);
      expand_round(seated_groups + 1, prob * open / denom);
      position_blocks_.pop_back();
    }
  }

  void append_arrivals(size_t t, int seated_groups) {
    int base = seated_groups * g_.group_size;
    for (int q = 1; q <= g_.group_size; ++q) position_blocks_[t].push_back(base + q);
  }

  void swap_units(int a, int b) {
    if (a == b) return;
    int pa = pos_of_[static_cast<size_t>(a - 1)];
    int pb = pos_of_[static_cast<size_t>(b - 1)];
    std::swap(unit_at_[static_cast<size_t>(pa - 1)], unit_at_[static_cast<size_t>(pb - 1)]);
    std::swap(pos_of_[static_cast<size_t>(a - 1)], pos_of_[static_cast<size_t>(b - 1)]);
  }

  void record(const Rational& prob) {
    budget_.check_count(++leaves_);
    std::vector<std::vector<int>> unit_blocks;
    unit_blocks.reserve(position_blocks_.size());
    for (const auto& pb : position_blocks_) {
      std::vector<int> ub;
      ub.reserve(pb.size());
      for (int p : pb) ub.push_back(unit_at_[static_cast<size_t>(p - 1)]);
      unit_blocks.push_back(std::move(ub));
    }
    table_[SetPartition(g_.ground_size(), std::move(unit_blocks))] += prob;
  }

  int num_groups_;
  GroupIndexing g_;
  ModelParams params_;
  SeatingRule rule_;
  EnumerationBudget budget_;
  long leaves_ = 0;

  std::vector<int> unit_at_;
  std::vector<int> pos_of_;
  std::vector<std::vector<int>> position_blocks_;
  std::map<SetPartition, Rational> table_;
};

}  // namespace detail

// The exact distribution the grouped seating rule induces, obtained by
// expanding every displacement and table choice.
inline ExactDist<SetPartition> seating_tree_exact(int num_groups, const GroupIndexing& g,
                                                  const ModelParams& params, SeatingRule rule,
                                                  const EnumerationBudget& budget = {}) {
  if (g.num_groups != num_groups) throw std::domain_error("group count mismatch");
  detail::SeatingTreeExpander expander(num_groups, g, params, rule, budget);
  return ExactDist<SetPartition>(expander.run());
}

}  // namespace exparts
