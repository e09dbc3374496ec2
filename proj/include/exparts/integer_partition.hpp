// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exparts/rational.hpp"
#include "exparts/set_partition.hpp"

namespace exparts {

// An integer partition of n stored as its multiplicity vector:
// multiplicity(j) parts of size j, sum j * multiplicity(j) = n.
class IntegerPartition {
 public:
  IntegerPartition(int n, std::vector<long> mult) : n_(n), mult_(std::move(mult)) {
    if (n_ < 1) throw std::invalid_argument("integer partition of a non-positive number");
    if (static_cast<int>(mult_.size()) != n_)
      throw std::invalid_argument("multiplicity vector must have length n");
    long weighted = 0;
    for (int j = 1; j <= n_; ++j) {
      long m = mult_[static_cast<size_t>(j - 1)];
      if (m < 0) throw std::invalid_argument("negative multiplicity");
      weighted += static_cast<long>(j) * m;
    }
    if (weighted != n_) throw std::invalid_argument("part sizes do not sum to n");
  }

  static IntegerPartition from_parts(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    if (n < 1) throw std::invalid_argument("parts must sum to a positive number");
    std::vector<long> mult(static_cast<size_t>(n), 0);
    for (int p : parts) {
      if (p < 1 || p > n) throw std::invalid_argument("part size out of range");
      ++mult[static_cast<size_t>(p - 1)];
    }
    return IntegerPartition(n, std::move(mult));
  }

  int n() const { return n_; }
  long multiplicity(int j) const { return mult_.at(static_cast<size_t>(j - 1)); }
  const std::vector<long>& multiplicities() const { return mult_; }

  long part_count() const {
    long c = 0;
    for (long m : mult_) c += m;
    return c;
  }

  std::vector<int> parts() const {
    std::vector<int> out;
    for (int j = n_; j >= 1; --j)
      for (long t = 0; t < multiplicity(j); ++t) out.push_back(j);
    return out;
  }

  // True when every part size is a multiple of `order`.
  bool supported_on_multiples_of(int order) const {
    for (int j = 1; j <= n_; ++j)
      if (j % order != 0 && multiplicity(j) != 0) return false;
    return true;
  }

  // Parts descending, space separated: "4 2 1".
  std::string to_string() const {
    std::ostringstream os;
    auto ps = parts();
    for (size_t i = 0; i < ps.size(); ++i) {
      if (i) os << ' ';
      os << ps[i];
    }
    return os.str();
  }

  static IntegerPartition parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> ps;
    int v;
    while (is >> v) ps.push_back(v);
    if (!is.eof()) throw std::invalid_argument("integer partition text contains a non-integer token");
    return from_parts(ps);
  }

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend std::strong_ordering operator<=>(const IntegerPartition& a, const IntegerPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.mult_ <=> b.mult_;
  }

 private:
  int n_;
  std::vector<long> mult_;
};

inline IntegerPartition block_sizes_to_integer_partition(const SetPartition& b) {
  std::vector<long> mult(static_cast<size_t>(b.n()), 0);
  for (const auto& block : b.blocks()) ++mult[block.size() - 1];
  return IntegerPartition(b.n(), std::move(mult));
}

// Number of set partitions of [n] with the given block-size profile:
// n! / prod_j (j!)^{m_j} m_j!.
inline BigInt count_set_partitions_for(const IntegerPartition& lambda) {
  BigInt num = factorial(static_cast<unsigned long>(lambda.n()));
  BigInt den = 1;
  for (int j = 1; j <= lambda.n(); ++j) {
    long m = lambda.multiplicity(j);
    if (m == 0) continue;
    BigInt jf = factorial(static_cast<unsigned long>(j));
    for (long t = 0; t < m; ++t) den *= jf;
    den *= factorial(static_cast<unsigned long>(m));
  }
  return num / den;
}

// Number of permutations whose cycle partition is B: prod_b Gamma(#b).
inline BigInt count_permutations_for(const SetPartition& b) {
  BigInt r = 1;
  for (const auto& block : b.blocks()) r *= gamma_int(block.size());
  return r;
}

// Number of order-j even set partitions of [n] with block sizes given by an
// even multiplicity vector m (supported on multiples of j):
// n! / prod_i ((ij)!)^{m_ij} m_ij!.
inline BigInt count_even_set_partitions_for(const IntegerPartition& m, int order) {
  if (order < 1 || m.n() % order != 0)
    throw std::domain_error("order must divide the partitioned number");
  if (!m.supported_on_multiples_of(order))
    throw std::domain_error("multiplicities off multiples of the order must vanish");
  BigInt num = factorial(static_cast<unsigned long>(m.n()));
  BigInt den = 1;
  for (int i = 1; i * order <= m.n(); ++i) {
    long mi = m.multiplicity(i * order);
    if (mi == 0) continue;
    BigInt f = factorial(static_cast<unsigned long>(i * order));
    for (long t = 0; t < mi; ++t) den *= f;
    den *= factorial(static_cast<unsigned long>(mi));
  }
  return num / den;
}

// Number of order-j balanced set partitions of [nj] (canonical typing) with
// block sizes given by m: (n!)^j / prod_i (i!)^{j m_ij} m_ij!.  The
// multiplicity factorial enters once: choosing the group-level partition
// already divides by m_ij!, and the j-1 matchings contribute (n!)^{j-1}
// divided by the per-block arrangement counts only.  (Exhaustive enumeration
// at n=2, order 3 pins this: profile {3,3} has 4 balanced partitions.)
inline BigInt count_balanced_set_partitions_for(const IntegerPartition& m, int order) {
  if (order < 1 || m.n() % order != 0)
    throw std::domain_error("order must divide the partitioned number");
  if (!m.supported_on_multiples_of(order))
    throw std::domain_error("multiplicities off multiples of the order must vanish");
  int groups = m.n() / order;
  BigInt num = 1;
  BigInt nf = factorial(static_cast<unsigned long>(groups));
  for (int t = 0; t < order; ++t) num *= nf;
  BigInt den = 1;
  for (int i = 1; i * order <= m.n(); ++i) {
    long mi = m.multiplicity(i * order);
    if (mi == 0) continue;
    BigInt f = factorial(static_cast<unsigned long>(i));
    for (long t = 0; t < static_cast<long>(order) * mi; ++t) den *= f;
    den *= factorial(static_cast<unsigned long>(mi));
  }
  return num / den;
}

}  // namespace exparts
