// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <algorithm>
#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace exparts {

// A partition of {1,...,n} into disjoint non-empty blocks, kept in canonical
// form: elements ascend within each block, blocks are ordered by least
// element.  Equality is structural.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    canonicalize_and_validate();
  }

  static SetPartition singletons(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(n));
    for (int e = 1; e <= n; ++e) blocks.push_back({e});
    return SetPartition(n, std::move(blocks));
  }

  static SetPartition single_block(int n) {
    std::vector<int> all(static_cast<size_t>(n));
    for (int e = 1; e <= n; ++e) all[static_cast<size_t>(e - 1)] = e;
    return SetPartition(n, {std::move(all)});
  }

  // Restricted growth string: rgs[e-1] is the 0-based id of the block holding
  // e, ids assigned in order of first appearance.
  static SetPartition from_rgs(const std::vector<int>& rgs) {
    int blocks_seen = 0;
    std::vector<std::vector<int>> blocks;
    for (size_t i = 0; i < rgs.size(); ++i) {
      int id = rgs[i];
      if (id < 0 || id > blocks_seen)
        throw std::invalid_argument("not a restricted growth string");
      if (id == blocks_seen) {
        blocks.emplace_back();
        ++blocks_seen;
      }
      blocks[static_cast<size_t>(id)].push_back(static_cast<int>(i) + 1);
    }
    return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
  }

  int n() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  std::vector<int> block_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    return sizes;
  }

  std::vector<int> rgs() const {
    std::vector<int> out(static_cast<size_t>(n_), -1);
    for (size_t id = 0; id < blocks_.size(); ++id)
      for (int e : blocks_[id]) out[static_cast<size_t>(e - 1)] = static_cast<int>(id);
    return out;
  }

  int block_of(int e) const {
    if (e < 1 || e > n_) throw std::out_of_range("element out of range");
    for (size_t id = 0; id < blocks_.size(); ++id)
      if (std::binary_search(blocks_[id].begin(), blocks_[id].end(), e))
        return static_cast<int>(id);
    throw std::logic_error("element missing from partition");
  }

  // Restriction to {1,...,m}: intersect blocks, drop empty intersections.
  SetPartition restrict_to(int m) const {
    if (m < 1 || m > n_) throw std::out_of_range("restriction size out of range");
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks_) {
      std::vector<int> kept;
      for (int e : b)
        if (e <= m) kept.push_back(e);
      if (!kept.empty()) out.push_back(std::move(kept));
    }
    return SetPartition(m, std::move(out));
  }

  // Drops one element and relabels the survivors to {1,...,n-1}, order
  // preserved.
  SetPartition without_element(int k) const {
    if (k < 1 || k > n_) throw std::out_of_range("element out of range");
    if (n_ == 1) throw std::domain_error("cannot remove the last element");
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks_) {
      std::vector<int> kept;
      for (int e : b)
        if (e != k) kept.push_back(e > k ? e - 1 : e);
      if (!kept.empty()) out.push_back(std::move(kept));
    }
    return SetPartition(n_ - 1, std::move(out));
  }

  // image[e-1] is the new label of e; image must be a bijection of 1..n.
  SetPartition relabeled(const std::vector<int>& image) const {
    if (static_cast<int>(image.size()) != n_)
      throw std::invalid_argument("relabeling size mismatch");
    std::vector<std::vector<int>> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) {
      std::vector<int> nb;
      nb.reserve(b.size());
      for (int e : b) nb.push_back(image[static_cast<size_t>(e - 1)]);
      out.push_back(std::move(nb));
    }
    return SetPartition(n_, std::move(out));
  }

  // Canonical text form: "1 3 5|2 4".
  std::string to_string() const {
    std::ostringstream os;
    for (size_t id = 0; id < blocks_.size(); ++id) {
      if (id) os << '|';
      for (size_t i = 0; i < blocks_[id].size(); ++i) {
        if (i) os << ' ';
        os << blocks_[id][i];
      }
    }
    return os.str();
  }

  // Strict parser: rejects non-canonical input with a diagnostic.
  static SetPartition parse(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> current;
    std::istringstream is(text);
    std::string piece;
    size_t start = 0;
    int total = 0;
    while (start <= text.size()) {
      size_t bar = text.find('|', start);
      std::string segment = text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
      std::istringstream seg(segment);
      current.clear();
      int e;
      while (seg >> e) current.push_back(e);
      if (!seg.eof())
        throw std::invalid_argument("partition text contains a non-integer token: '" + segment + "'");
      if (current.empty())
        throw std::invalid_argument("partition text contains an empty block");
      for (size_t i = 1; i < current.size(); ++i)
        if (current[i] <= current[i - 1])
          throw std::invalid_argument("block elements must strictly ascend: '" + segment + "'");
      if (!blocks.empty() && current.front() <= blocks.back().front())
        throw std::invalid_argument("blocks must be ordered by least element");
      total += static_cast<int>(current.size());
      blocks.push_back(current);
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    return SetPartition(total, std::move(blocks));
  }

  static SetPartition parse(const std::string& text, int expected_n) {
    SetPartition p = parse(text);
    if (p.n() != expected_n)
      throw std::invalid_argument("partition covers " + std::to_string(p.n()) +
                                  " elements, expected " + std::to_string(expected_n));
    return p;
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rgs() <=> b.rgs();
  }

 private:
  void canonicalize_and_validate() {
    if (n_ < 1) throw std::invalid_argument("partition ground set must be non-empty");
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    int total = 0;
    for (auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("partition blocks must be non-empty");
      std::sort(b.begin(), b.end());
      for (int e : b) {
        if (e < 1 || e > n_) throw std::invalid_argument("partition element out of range");
        if (seen[static_cast<size_t>(e - 1)]) throw std::invalid_argument("duplicate partition element");
        seen[static_cast<size_t>(e - 1)] = 1;
        ++total;
      }
    }
    if (total != n_) throw std::invalid_argument("partition does not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  int n_;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace exparts
