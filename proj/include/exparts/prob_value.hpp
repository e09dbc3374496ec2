// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exparts/rational.hpp"

namespace exparts {

// A probability carried on two channels: an exact rational and/or a
// log-space double.  Evaluators fill both; oracle-built tables may carry the
// exact channel only.
struct ProbValue {
  std::optional<Rational> exact;
  std::optional<double> log_value;

  static ProbValue from_exact(Rational q) {
    check_range(q);
    double lg = q == 0 ? -std::numeric_limits<double>::infinity() : std::log(to_double(q));
    return ProbValue{std::move(q), lg};
  }

  static ProbValue dual(Rational q, double log_q) {
    check_range(q);
    return ProbValue{std::move(q), log_q};
  }

  const Rational& exact_or_throw() const {
    if (!exact) throw std::domain_error("probability value has no exact channel");
    return *exact;
  }

  // Relative agreement between the channels, for the cross-check invariant.
  bool channels_agree(double rel_tol = 1e-12) const {
    if (!exact || !log_value) return true;
    if (*exact == 0) return std::isinf(*log_value) && *log_value < 0;
    double reference = std::log(to_double(*exact));
    double scale = std::max({1.0, std::fabs(reference), std::fabs(*log_value)});
    return std::fabs(reference - *log_value) <= rel_tol * scale;
  }

 private:
  static void check_range(const Rational& q) {
    if (q < 0 || q > 1) throw std::domain_error("probability outside [0,1]: " + to_string(q));
  }
};

// A finite probability table over canonical combinatorial objects, sorted by
// the object ordering, entries distinct.
template <typename T>
class ExactDist {
 public:
  ExactDist() = default;

  explicit ExactDist(std::map<T, Rational> table) {
    entries_.reserve(table.size());
    for (auto& [obj, w] : table) {
      if (w < 0) throw std::domain_error("negative weight in distribution");
      entries_.emplace_back(obj, w);
    }
  }

  const std::vector<std::pair<T, Rational>>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  Rational total_mass() const {
    Rational s = 0;
    for (const auto& [obj, w] : entries_) s += w;
    return s;
  }

  bool is_normalized() const { return total_mass() == 1; }

  std::optional<Rational> weight_of(const T& obj) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), obj,
                               [](const auto& e, const T& key) { return e.first < key; });
    if (it == entries_.end() || !(it->first == obj)) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<std::pair<T, Rational>> entries_;
};

template <typename T, typename PmfFn>
ExactDist<T> build_distribution(const std::vector<T>& support, PmfFn&& pmf) {
  std::map<T, Rational> table;
  for (const auto& obj : support) {
    auto [it, inserted] = table.emplace(obj, pmf(obj));
    if (!inserted) throw std::invalid_argument("duplicate support entry");
  }
  return ExactDist<T>(std::move(table));
}

// Line-delimited records {"object": canonical text, "prob": {"num","den"}},
// ordered by the canonical object ordering.
template <typename T, typename TextFn>
std::string serialize_records(const ExactDist<T>& dist, TextFn&& text_of) {
  std::string out;
  for (const auto& [obj, w] : dist.entries()) {
    out += "{\"object\":\"" + text_of(obj) + "\",\"prob\":{\"num\":\"" + w.get_num().get_str() +
           "\",\"den\":\"" + w.get_den().get_str() + "\"}}\n";
  }
  return out;
}

}  // namespace exparts
