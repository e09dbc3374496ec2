// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exparts/set_partition.hpp"

namespace exparts {

// A bijection {1,...,n} -> {1,...,n} stored as its one-line image.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    validate();
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i;
    return Permutation(std::move(img));
  }

  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i;
    for (const auto& c : cycles) {
      for (size_t i = 0; i < c.size(); ++i) {
        int from = c[i];
        int to = c[(i + 1) % c.size()];
        if (from < 1 || from > n) throw std::invalid_argument("cycle element out of range");
        img[static_cast<size_t>(from - 1)] = to;
      }
    }
    return Permutation(std::move(img));
  }

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_.at(static_cast<size_t>(i - 1)); }
  const std::vector<int>& image() const { return image_; }

  int inverse_of(int v) const {
    for (int i = 1; i <= n(); ++i)
      if ((*this)(i) == v) return i;
    throw std::logic_error("value missing from permutation image");
  }

  // Cycles in canonical order: each cycle starts at its least element, cycles
  // listed by least element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<char> seen(image_.size(), 0);
    std::vector<std::vector<int>> out;
    for (int start = 1; start <= n(); ++start) {
      if (seen[static_cast<size_t>(start - 1)]) continue;
      std::vector<int> cycle;
      int cur = start;
      do {
        cycle.push_back(cur);
        seen[static_cast<size_t>(cur - 1)] = 1;
        cur = (*this)(cur);
      } while (cur != start);
      out.push_back(std::move(cycle));
    }
    return out;
  }

  int cycle_count() const {
    std::vector<char> seen(image_.size(), 0);
    int count = 0;
    for (int start = 1; start <= n(); ++start) {
      if (seen[static_cast<size_t>(start - 1)]) continue;
      ++count;
      int cur = start;
      do {
        seen[static_cast<size_t>(cur - 1)] = 1;
        cur = (*this)(cur);
      } while (cur != start);
    }
    return count;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < image_.size(); ++i) {
      if (i) os << ' ';
      os << image_[i];
    }
    return os.str();
  }

  static Permutation parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> img;
    int v;
    while (is >> v) img.push_back(v);
    if (!is.eof())
      throw std::invalid_argument("permutation text contains a non-integer token");
    if (img.empty()) throw std::invalid_argument("empty permutation text");
    return Permutation(std::move(img));
  }

  static Permutation parse(const std::string& text, int expected_n) {
    Permutation p = parse(text);
    if (p.n() != expected_n)
      throw std::invalid_argument("permutation has " + std::to_string(p.n()) +
                                  " entries, expected " + std::to_string(expected_n));
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  void validate() const {
    int size = n();
    if (size < 1) throw std::invalid_argument("permutation must act on a non-empty set");
    std::vector<char> seen(static_cast<size_t>(size), 0);
    for (int v : image_) {
      if (v < 1 || v > size) throw std::invalid_argument("permutation image value out of range");
      if (seen[static_cast<size_t>(v - 1)]) throw std::invalid_argument("permutation image repeats a value");
      seen[static_cast<size_t>(v - 1)] = 1;
    }
  }

  std::vector<int> image_;
};

// The partition whose blocks are the cycles of sigma.
inline SetPartition cycles_to_partition(const Permutation& sigma) {
  return SetPartition(sigma.n(), sigma.cycles());
}

// Removes element k and splices its predecessor to its successor in the
// cycle; the surviving ground set is relabeled to {1,...,n-1} preserving
// order.
inline Permutation delete_and_repair(const Permutation& sigma, int k) {
  int n = sigma.n();
  if (n == 1) throw std::underflow_error("cannot delete from a permutation of one element");
  if (k < 1 || k > n) throw std::out_of_range("deleted element out of range");
  std::vector<int> img;
  img.reserve(static_cast<size_t>(n - 1));
  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    int v = sigma(i);
    if (v == k) v = sigma(k);
    img.push_back(v > k ? v - 1 : v);
  }
  return Permutation(std::move(img));
}

}  // namespace exparts
