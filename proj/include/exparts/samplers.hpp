// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exparts/group_indexing.hpp"
#include "exparts/model_params.hpp"
#include "exparts/permutation.hpp"
#include "exparts/rng.hpp"
#include "exparts/set_partition.hpp"

namespace exparts {

enum class SeatingRule { balanced, even };

// Full record of a grouped sampler's random choices; replaying it rebuilds
// the partition exactly.
struct SeatingTrace {
  struct GroupStep {
    std::vector<int> displaced_units;  // chosen partner per arriver i = 2..group_size
    int table = -1;                    // block id in creation order, -1 opens a block
  };
  int num_groups = 0;
  int group_size = 0;
  std::vector<GroupStep> steps;  // one per arriving group 2..num_groups
};

namespace detail {

// Seating weights scaled to a common integer denominator so table picks are
// exact integer draws.
struct CrpWeights {
  int64_t unit;          // scale factor
  int64_t alpha_scaled;  // alpha * unit
  int64_t theta_scaled;  // theta * unit

  static CrpWeights from(const ModelParams& p) {
    const auto lcm_den = [](const Rational& a, const Rational& b) {
      BigInt l;
      mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
      return l;
    };
    BigInt l = lcm_den(p.alpha(), p.theta());
    if (!l.fits_slong_p() || l.get_si() > 1'000'000'000)
      throw std::invalid_argument("parameter denominators too large for the sampler");
    int64_t unit = l.get_si();
    Rational a = p.alpha() * l;
    Rational t = p.theta() * l;
    if (!a.get_num().fits_slong_p() || !t.get_num().fits_slong_p())
      throw std::invalid_argument("parameter magnitudes too large for the sampler");
    return CrpWeights{unit, static_cast<int64_t>(a.get_num().get_si()),
                      static_cast<int64_t>(t.get_num().get_si())};
  }

  int64_t join_weight(int64_t block_size) const { return block_size * unit - alpha_scaled; }

  int64_t open_weight(int64_t block_count) const {
    int64_t w = theta_scaled + block_count * alpha_scaled;
    return w > 0 ? w : 0;
  }
};

// Index of the chosen table: 0..blocks-1 joins, blocks opens a new one.
inline size_t pick_table(const CrpWeights& w, const std::vector<std::vector<int>>& blocks,
                         RngHandle& rng) {
  int64_t total = 0;
  for (const auto& b : blocks) total += w.join_weight(static_cast<int64_t>(b.size()));
  int64_t open = w.open_weight(static_cast<int64_t>(blocks.size()));
  total += open;
  if (total <= 0) throw std::logic_error("seating weights sum to zero");
  auto draw = static_cast<int64_t>(rng.uniform_below(static_cast<uint64_t>(total)));
  for (size_t t = 0; t < blocks.size(); ++t) {
    int64_t wt = w.join_weight(static_cast<int64_t>(blocks[t].size()));
    if (draw < wt) return t;
    draw -= wt;
  }
  return blocks.size();
}

}  // namespace detail

// Sequential two-parameter seating of {1,...,n}: element k+1 joins a block b
// with probability (#b - alpha)/(k + theta) and opens a block with
// probability (theta + alpha * #blocks)/(k + theta).
inline SetPartition crp_sample(int n, const ModelParams& params, RngHandle& rng) {
  if (n < 1) throw std::invalid_argument("sample size must be positive");
  detail::CrpWeights w = detail::CrpWeights::from(params);
  std::vector<std::vector<int>> blocks{{1}};
  for (int e = 2; e <= n; ++e) {
    size_t t = detail::pick_table(w, blocks, rng);
    if (t == blocks.size())
      blocks.push_back({e});
    else
      blocks[t].push_back(e);
  }
  return SetPartition(n, std::move(blocks));
}

namespace detail {

// Shared grouped seating walk.  Units arrive in groups of group_size; the
// first group sits together; each later group first swaps seats per the rule
// (balanced: each arriver of type i picks uniformly among the same-type
// units, itself included; even: among all earlier units), then the occupants
// of the arrival positions are seated as one unit by the two-parameter rule.
// `choose` supplies each swap partner, `choose_table` the table.
template <typename ChoosePartner, typename ChooseTable>
SetPartition run_group_seating(int num_groups, const GroupIndexing& g, SeatingRule rule,
                               ChoosePartner&& choose_partner, ChooseTable&& choose_table,
                               SeatingTrace* trace) {
  int j = g.group_size;
  int ground = num_groups * j;
  std::vector<int> unit_at(static_cast<size_t>(ground));
  std::vector<int> pos_of(static_cast<size_t>(ground));
  for (int p = 1; p <= ground; ++p) {
    unit_at[static_cast<size_t>(p - 1)] = p;
    pos_of[static_cast<size_t>(p - 1)] = p;
  }
  std::vector<std::vector<int>> position_blocks;
  std::vector<int> first_group(static_cast<size_t>(j));
  for (int t = 0; t < j; ++t) first_group[static_cast<size_t>(t)] = t + 1;
  position_blocks.push_back(std::move(first_group));

  if (trace) {
    trace->num_groups = num_groups;
    trace->group_size = j;
    trace->steps.clear();
  }

  for (int seated_groups = 1; seated_groups < num_groups; ++seated_groups) {
    SeatingTrace::GroupStep step;
    int base = seated_groups * j;
    for (int i = 2; i <= j; ++i) {
      int arriver = base + i;
      int partner = choose_partner(rule, seated_groups, i);
      step.displaced_units.push_back(partner);
      if (partner != arriver) {
        int pa = pos_of[static_cast<size_t>(arriver - 1)];
        int pb = pos_of[static_cast<size_t>(partner - 1)];
        std::swap(unit_at[static_cast<size_t>(pa - 1)], unit_at[static_cast<size_t>(pb - 1)]);
        std::swap(pos_of[static_cast<size_t>(arriver - 1)], pos_of[static_cast<size_t>(partner - 1)]);
      }
    }
    size_t t = choose_table(position_blocks);
    step.table = t == position_blocks.size() ? -1 : static_cast<int>(t);
    std::vector<int> arrival_positions(static_cast<size_t>(j));
    for (int q = 0; q < j; ++q) arrival_positions[static_cast<size_t>(q)] = base + q + 1;
    if (t == position_blocks.size())
      position_blocks.push_back(std::move(arrival_positions));
    else
      position_blocks[t].insert(position_blocks[t].end(), arrival_positions.begin(),
                                arrival_positions.end());
    if (trace) trace->steps.push_back(std::move(step));
  }

  std::vector<std::vector<int>> unit_blocks;
  unit_blocks.reserve(position_blocks.size());
  for (const auto& pb : position_blocks) {
    std::vector<int> ub;
    ub.reserve(pb.size());
    for (int p : pb) ub.push_back(unit_at[static_cast<size_t>(p - 1)]);
    unit_blocks.push_back(std::move(ub));
  }
  return SetPartition(ground, std::move(unit_blocks));
}

inline int random_partner(SeatingRule rule, int seated_groups, int i, int group_size,
                          RngHandle& rng) {
  if (rule == SeatingRule::balanced) {
    // The n+1 same-type units: i, j+i, ..., (n-1)j+i and the arriver itself.
    auto c = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(seated_groups + 1)));
    return c * group_size + i;
  }
  // All earlier units, the arriver excluded.
  int pool = seated_groups * group_size + i - 1;
  return static_cast<int>(rng.uniform_below(static_cast<uint64_t>(pool))) + 1;
}

}  // namespace detail

// Balanced grouped seating; the result is balanced under the canonical
// typing on every draw.
inline std::pair<SetPartition, SeatingTrace> balanced_crp_sample(int num_groups,
                                                                 const GroupIndexing& g,
                                                                 const ModelParams& params,
                                                                 RngHandle& rng) {
  if (g.num_groups != num_groups) throw std::domain_error("group count mismatch");
  detail::CrpWeights w = detail::CrpWeights::from(params);
  SeatingTrace trace;
  SetPartition result = detail::run_group_seating(
      num_groups, g, SeatingRule::balanced,
      [&](SeatingRule rule, int seated, int i) {
        return detail::random_partner(rule, seated, i, g.group_size, rng);
      },
      [&](const std::vector<std::vector<int>>& blocks) { return detail::pick_table(w, blocks, rng); },
      &trace);
  return {std::move(result), std::move(trace)};
}

// Even grouped seating; the result is even of the indexing's order on every
// draw.
inline std::pair<SetPartition, SeatingTrace> even_crp_sample(int num_groups,
                                                             const GroupIndexing& g,
                                                             const ModelParams& params,
                                                             RngHandle& rng) {
  if (g.num_groups != num_groups) throw std::domain_error("group count mismatch");
  detail::CrpWeights w = detail::CrpWeights::from(params);
  SeatingTrace trace;
  SetPartition result = detail::run_group_seating(
      num_groups, g, SeatingRule::even,
      [&](SeatingRule rule, int seated, int i) {
        return detail::random_partner(rule, seated, i, g.group_size, rng);
      },
      [&](const std::vector<std::vector<int>>& blocks) { return detail::pick_table(w, blocks, rng); },
      &trace);
  return {std::move(result), std::move(trace)};
}

// Rebuilds the partition a trace came from.
inline SetPartition replay_seating_trace(const SeatingTrace& trace, SeatingRule rule) {
  if (trace.num_groups < 1 || trace.group_size < 1)
    throw std::invalid_argument("trace lacks its dimensions");
  if (static_cast<int>(trace.steps.size()) != trace.num_groups - 1)
    throw std::invalid_argument("trace step count does not match the group count");
  GroupIndexing g(trace.num_groups, trace.group_size);
  size_t step_index = 0;
  return detail::run_group_seating(
      trace.num_groups, g, rule,
      [&](SeatingRule, int seated, int i) {
        const auto& step = trace.steps[static_cast<size_t>(seated - 1)];
        return step.displaced_units.at(static_cast<size_t>(i - 2));
      },
      [&](const std::vector<std::vector<int>>& blocks) {
        const auto& step = trace.steps[step_index++];
        if (step.table < 0) return blocks.size();
        if (static_cast<size_t>(step.table) >= blocks.size())
          throw std::invalid_argument("trace table index out of range");
        return static_cast<size_t>(step.table);
      },
      nullptr);
}

struct TwoStepBalancedSample {
  SetPartition group_partition;
  std::vector<Permutation> matchings;
  SetPartition assembled;
};

// Two-step balanced construction: a two-parameter partition at the group
// level, independent uniform matchings, assembled to the full ground set.
inline TwoStepBalancedSample two_step_balanced_sample(int num_groups, const GroupIndexing& g,
                                                      const ModelParams& params, RngHandle& rng) {
  if (g.num_groups != num_groups) throw std::domain_error("group count mismatch");
  SetPartition group_partition = crp_sample(num_groups, params, rng);
  std::vector<Permutation> matchings;
  matchings.reserve(static_cast<size_t>(g.group_size - 1));
  for (int k = 2; k <= g.group_size; ++k)
    matchings.emplace_back(rng.uniform_permutation_image(num_groups));
  SetPartition assembled = assemble_balanced(group_partition, matchings, g);
  return {std::move(group_partition), std::move(matchings), std::move(assembled)};
}

struct TwoStepEvenSample {
  SetPartition group_partition;
  Permutation scramble;
  SetPartition assembled;
};

// Two-step even construction: a group-level two-parameter partition and one
// uniform permutation of the full ground set.
inline TwoStepEvenSample two_step_even_sample(int num_groups, const GroupIndexing& g,
                                              const ModelParams& params, RngHandle& rng) {
  if (g.num_groups != num_groups) throw std::domain_error("group count mismatch");
  SetPartition group_partition = crp_sample(num_groups, params, rng);
  Permutation scramble(rng.uniform_permutation_image(g.ground_size()));
  SetPartition assembled = assemble_even(group_partition, scramble, g);
  return {std::move(group_partition), std::move(scramble), std::move(assembled)};
}

}  // namespace exparts
