// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <stdexcept>
#include <vector>

#include "exparts/permutation.hpp"
#include "exparts/set_partition.hpp"

namespace exparts {

// Grouped ground set [num_groups * group_size].  Group i holds the elements
// {(i-1)*group_size + 1, ..., i*group_size}; the canonical typing assigns
// element e the type ((e-1) mod group_size) + 1, so each group is one element
// of every type.
struct GroupIndexing {
  int num_groups;
  int group_size;

  GroupIndexing(int groups, int size) : num_groups(groups), group_size(size) {
    if (groups < 1 || size < 1)
      throw std::invalid_argument("group indexing requires positive counts");
  }

  int ground_size() const { return num_groups * group_size; }

  int type_of(int e) const {
    if (e < 1 || e > ground_size()) throw std::out_of_range("element out of range");
    return (e - 1) % group_size + 1;
  }

  std::vector<int> group(int i) const {
    if (i < 1 || i > num_groups) throw std::out_of_range("group index out of range");
    std::vector<int> out(static_cast<size_t>(group_size));
    for (int t = 0; t < group_size; ++t) out[static_cast<size_t>(t)] = (i - 1) * group_size + t + 1;
    return out;
  }
};

// True when every block size is a multiple of `order`.
inline bool is_j_even(const SetPartition& b, int order) {
  if (order < 1 || b.n() % order != 0)
    throw std::domain_error("order must divide the ground-set size");
  for (const auto& block : b.blocks())
    if (block.size() % static_cast<size_t>(order) != 0) return false;
  return true;
}

// Balance under an explicit typing: typing[e-1] in 1..group_size, each type
// used exactly num_groups times.
inline bool is_j_balanced(const SetPartition& b, const GroupIndexing& g,
                          const std::vector<int>& typing) {
  if (b.n() != g.ground_size()) throw std::domain_error("partition size does not match indexing");
  if (static_cast<int>(typing.size()) != g.ground_size())
    throw std::domain_error("typing size does not match indexing");
  std::vector<int> totals(static_cast<size_t>(g.group_size), 0);
  for (int t : typing) {
    if (t < 1 || t > g.group_size) throw std::domain_error("type out of range");
    ++totals[static_cast<size_t>(t - 1)];
  }
  for (int c : totals)
    if (c != g.num_groups) throw std::domain_error("each type must appear once per group");
  for (const auto& block : b.blocks()) {
    std::vector<int> counts(static_cast<size_t>(g.group_size), 0);
    for (int e : block) ++counts[static_cast<size_t>(typing[static_cast<size_t>(e - 1)] - 1)];
    for (int c : counts)
      if (c != counts[0]) return false;
  }
  return true;
}

// Balance under the canonical typing.
inline bool is_j_balanced(const SetPartition& b, const GroupIndexing& g) {
  if (b.n() != g.ground_size()) throw std::domain_error("partition size does not match indexing");
  std::vector<int> typing(static_cast<size_t>(g.ground_size()));
  for (int e = 1; e <= g.ground_size(); ++e)
    typing[static_cast<size_t>(e - 1)] = g.type_of(e);
  return is_j_balanced(b, g, typing);
}

// Builds the balanced partition of the full ground set from a group-level
// partition and matchings between the type-1 copy and each other type.  The
// type-k copy of within-type index m carries the global label (m-1)*j + k;
// the type-1 matching is the identity.
inline SetPartition assemble_balanced(const SetPartition& group_partition,
                                      const std::vector<Permutation>& matchings,
                                      const GroupIndexing& g) {
  if (group_partition.n() != g.num_groups)
    throw std::domain_error("group partition size does not match indexing");
  if (static_cast<int>(matchings.size()) != g.group_size - 1)
    throw std::domain_error("expected one matching per non-identity type");
  for (const auto& m : matchings)
    if (m.n() != g.num_groups) throw std::domain_error("matching size does not match indexing");
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<size_t>(group_partition.block_count()));
  for (const auto& block : group_partition.blocks()) {
    std::vector<int> out;
    out.reserve(block.size() * static_cast<size_t>(g.group_size));
    for (int m : block) {
      out.push_back((m - 1) * g.group_size + 1);
      for (int k = 2; k <= g.group_size; ++k) {
        int target = matchings[static_cast<size_t>(k - 2)](m);
        out.push_back((target - 1) * g.group_size + k);
      }
    }
    blocks.push_back(std::move(out));
  }
  return SetPartition(g.ground_size(), std::move(blocks));
}

// Builds the even partition of the full ground set: each group is pushed
// through sigma and the images of the groups in one block of the group-level
// partition are merged.
inline SetPartition assemble_even(const SetPartition& group_partition,
                                  const Permutation& sigma, const GroupIndexing& g) {
  if (group_partition.n() != g.num_groups)
    throw std::domain_error("group partition size does not match indexing");
  if (sigma.n() != g.ground_size())
    throw std::domain_error("permutation size does not match indexing");
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<size_t>(group_partition.block_count()));
  for (const auto& block : group_partition.blocks()) {
    std::vector<int> out;
    out.reserve(block.size() * static_cast<size_t>(g.group_size));
    for (int k : block)
      for (int l : g.group(k)) out.push_back(sigma(l));
    blocks.push_back(std::move(out));
  }
  return SetPartition(g.ground_size(), std::move(blocks));
}

}  // namespace exparts
