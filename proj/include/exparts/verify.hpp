// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "exparts/claims_audit.hpp"
#include "exparts/distributions.hpp"
#include "exparts/enumerate.hpp"
#include "exparts/oracle.hpp"
#include "exparts/samplers.hpp"
#include "exparts/seating_tree.hpp"

namespace exparts {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

// Default verification grid: orders 2 and 3 with the ground set capped at 8,
// one parameter point per branch of the model (interior two-parameter, the
// zero-discount boundary, and the negative-kappa regime).
struct VerifyGrid {
  std::vector<int> orders{2, 3};
  int max_ground = 8;
  std::vector<ModelParams> params{ModelParams::two_param(make_rational(1, 2), make_rational(1)),
                                  ModelParams::two_param(make_rational(0), make_rational(1)),
                                  ModelParams::negative_kappa(make_rational(1, 2), 3)};
  std::vector<Rational> one_param_values{make_rational(1, 2), make_rational(1), make_rational(2)};
};

namespace detail {

inline std::string ratio_detail(long ok, long all) {
  return std::to_string(ok) + "/" + std::to_string(all) + " grid points exact";
}

template <typename Support, typename Pmf>
bool mass_is_one(const Support& support, Pmf&& pmf) {
  Rational mass = 0;
  for (const auto& obj : support) mass += pmf(obj);
  return mass == 1;
}

}  // namespace detail

// Exact normalization of every implemented law over its enumerated support.
inline std::vector<CheckResult> normalization_suite(const VerifyGrid& grid = {},
                                                    const EnumerationBudget& budget = {}) {
  std::vector<CheckResult> out;
  auto record = [&](const std::string& id, long ok, long all) {
    out.push_back({id, ok == all, detail::ratio_detail(ok, all)});
  };

  {
    long ok = 0, all = 0;
    for (int n = 1; n <= grid.max_ground; ++n) {
      auto partitions = enumerate_partitions(n, budget);
      for (const auto& p : grid.params) {
        ++all;
        ok += detail::mass_is_one(partitions, [&](const SetPartition& b) {
          return two_param_partition_pmf(b, p).exact_or_throw();
        });
      }
      for (const auto& a : grid.one_param_values) {
        ++all;
        ok += detail::mass_is_one(partitions, [&](const SetPartition& b) {
          return ewens_partition_pmf(b, a).exact_or_throw();
        });
      }
      auto profiles = enumerate_integer_partitions(n);
      for (const auto& a : grid.one_param_values) {
        ++all;
        ok += detail::mass_is_one(profiles, [&](const IntegerPartition& m) {
          return ewens_integer_pmf(m, a).exact_or_throw();
        });
      }
    }
    record("normalization/ungrouped-laws", ok, all);
  }

  long ok_b = 0, all_b = 0, ok_e = 0, all_e = 0, ok_lim = 0, all_lim = 0;
  long ok_prof = 0, all_prof = 0;
  for (int order : grid.orders) {
    for (int n = 1; n * order <= grid.max_ground; ++n) {
      GroupIndexing g(n, order);
      auto balanced = enumerate_balanced(g, budget);
      auto even = enumerate_even(n, order, budget);
      auto profiles = enumerate_integer_partitions(g.ground_size(), order);
      for (const auto& p : grid.params) {
        ++all_b;
        ok_b += detail::mass_is_one(balanced, [&](const SetPartition& b) {
          return balanced_partition_pmf(b, g, p).exact_or_throw();
        });
        ++all_e;
        ok_e += detail::mass_is_one(even, [&](const SetPartition& b) {
          return even_partition_pmf(b, g, p).exact_or_throw();
        });
        ++all_prof;
        ok_prof += detail::mass_is_one(profiles, [&](const IntegerPartition& m) {
          return balanced_integer_pmf(m, order, p).exact_or_throw();
        });
        ++all_prof;
        ok_prof += detail::mass_is_one(profiles, [&](const IntegerPartition& m) {
          return even_integer_pmf(m, order, p).exact_or_throw();
        });
      }
      for (const auto& lambda : grid.one_param_values) {
        ++all_lim;
        ok_lim += detail::mass_is_one(balanced, [&](const SetPartition& b) {
          return balanced_partition_limit_pmf(b, g, lambda).exact_or_throw();
        });
        ++all_lim;
        ok_lim += detail::mass_is_one(even, [&](const SetPartition& b) {
          return even_partition_limit_pmf(b, g, lambda).exact_or_throw();
        });
      }
    }
  }
  record("normalization/balanced-law", ok_b, all_b);
  record("normalization/even-law", ok_e, all_e);
  record("normalization/profile-laws", ok_prof, all_prof);
  record("normalization/limit-laws", ok_lim, all_lim);

  {
    long ok = 0, all = 0;
    for (int n = 1; n <= 6; ++n) {
      auto perms = enumerate_permutations(n, budget);
      for (const auto& a : grid.one_param_values) {
        ++all;
        ok += detail::mass_is_one(perms, [&](const Permutation& s) {
          return ewens_permutation_pmf(s, a).exact_or_throw();
        });
      }
    }
    for (int order : grid.orders) {
      for (int n = 1; n * order <= 6; ++n) {
        GroupIndexing g(n, order);
        std::vector<Permutation> support;
        for (const auto& s : enumerate_permutations(g.ground_size(), budget))
          if (is_j_even(cycles_to_partition(s), order)) support.push_back(s);
        for (const auto& p : grid.params) {
          ++all;
          ok += detail::mass_is_one(support, [&](const Permutation& s) {
            return even_permutation_pmf(s, g, p).exact_or_throw();
          });
        }
      }
    }
    for (const auto& p : grid.params) {
      Rational mass = 0;
      for (const auto& s1 : enumerate_permutations(3, budget))
        for (const auto& m : enumerate_permutations(3, budget))
          mass += balanced_permutation_pmf(s1, {m}, GroupIndexing(3, 2), p).exact_or_throw();
      ++all;
      ok += mass == 1;
      mass = 0;
      for (const auto& s0 : enumerate_permutations(2, budget))
        for (const auto& s : enumerate_permutations(4, budget))
          mass += even_permutation_pair_pmf(s0, s, p).exact_or_throw();
      ++all;
      ok += mass == 1;
      mass = 0;
      for (const auto& pi : enumerate_partitions(2, budget))
        for (const auto& s : enumerate_permutations(4, budget))
          mass += joint_even_pmf(pi, s, p).exact_or_throw();
      ++all;
      ok += mass == 1;
      mass = 0;
      for (const auto& pi : enumerate_partitions(3, budget))
        for (const auto& m : enumerate_permutations(3, budget))
          mass += joint_balanced_pmf(pi, {m}, GroupIndexing(3, 2), p).exact_or_throw();
      ++all;
      ok += mass == 1;
    }
    record("normalization/permutation-and-joint-laws", ok, all);
  }
  return out;
}

// The grouped seating processes, fully expanded, equal the closed-form laws.
inline std::vector<CheckResult> seating_tree_suite(const EnumerationBudget& budget = {}) {
  std::vector<CheckResult> out;
  std::vector<std::pair<int, int>> dims{{1, 2}, {2, 2}, {3, 2}, {2, 3}};
  std::vector<ModelParams> params{
      ModelParams::two_param(make_rational(1, 2), make_rational(1)),
      ModelParams::two_param(make_rational(0), make_rational(1)),
      ModelParams::two_param(make_rational(1), make_rational(2)),
      ModelParams::negative_kappa(make_rational(1, 2), 3),
      ModelParams::negative_kappa(make_rational(1), 2),
      ModelParams::negative_kappa(make_rational(1, 3), 4)};
  long ok_b = 0, ok_e = 0, all = 0;
  for (auto [n, order] : dims) {
    GroupIndexing g(n, order);
    auto balanced = enumerate_balanced(g, budget);
    auto even = enumerate_even(n, order, budget);
    for (const auto& p : params) {
      ++all;
      auto tree_b = seating_tree_exact(n, g, p, SeatingRule::balanced, budget);
      auto law_b = build_distribution(balanced, [&](const SetPartition& b) {
        return balanced_partition_pmf(b, g, p).exact_or_throw();
      });
      ok_b += max_abs_difference(tree_b, law_b) == 0;
      auto tree_e = seating_tree_exact(n, g, p, SeatingRule::even, budget);
      auto law_e = build_distribution(even, [&](const SetPartition& b) {
        return even_partition_pmf(b, g, p).exact_or_throw();
      });
      ok_e += max_abs_difference(tree_e, law_e) == 0;
    }
  }
  out.push_back({"seating-tree/balanced", ok_b == all, detail::ratio_detail(ok_b, all)});
  out.push_back({"seating-tree/even", ok_e == all, detail::ratio_detail(ok_e, all)});
  return out;
}

// The rising-factorial identity: the cycle-weight sum over order-even
// partitions equals (alpha/order)^{rising n}/n!.  Checked at nk+1 distinct
// rational points, which pins the polynomial identity by degree.
inline std::vector<CheckResult> identity_suite(int max_ground = 8,
                                               const EnumerationBudget& budget = {}) {
  std::vector<CheckResult> out;
  long ok = 0, all = 0;
  for (int order = 1; order <= max_ground; ++order) {
    for (int n = 1; n * order <= max_ground; ++n) {
      int degree = n * order;
      for (int t = 1; t <= degree + 1; ++t) {
        Rational alpha = make_rational(t, 2);
        ++all;
        Rational lhs = even_cycle_weight_sum(n, order, alpha, budget);
        Rational rhs = rising_factorial(alpha / order, static_cast<unsigned long>(n)) /
                       Rational(factorial(static_cast<unsigned long>(n)));
        ok += lhs == rhs;
      }
    }
  }
  out.push_back({"identity/even-cycle-weight-sum", ok == all, detail::ratio_detail(ok, all)});
  return out;
}

// Exact marginal consistency along the projective systems.
inline std::vector<CheckResult> consistency_suite(const VerifyGrid& grid = {},
                                                  const EnumerationBudget& budget = {}) {
  std::vector<CheckResult> out;
  {
    long ok = 0, all = 0;
    for (int n = 1; n <= 5; ++n) {
      for (const auto& p : grid.params) {
        ++all;
        auto pmf = [&](const SetPartition& b) {
          return two_param_partition_pmf(b, p).exact_or_throw();
        };
        ok += partition_restriction_consistency(pmf, n, budget).exact_match;
      }
    }
    out.push_back({"consistency/two-param-restriction", ok == all, detail::ratio_detail(ok, all)});
  }
  {
    long ok = 0, all = 0;
    for (int n = 1; n <= 4; ++n) {
      for (const auto& a : grid.one_param_values) {
        ++all;
        auto pmf = [&](const Permutation& s) {
          return ewens_permutation_pmf(s, a).exact_or_throw();
        };
        ok += permutation_delete_repair_consistency(pmf, n, budget).exact_match;
      }
    }
    out.push_back(
        {"consistency/permutation-delete-repair", ok == all, detail::ratio_detail(ok, all)});
  }
  {
    long ok = 0, all = 0;
    for (int n = 1; n <= 3; ++n) {
      for (const auto& p : grid.params) {
        ++all;
        ok += joint_balanced_consistency(GroupIndexing(n, 2), p, budget).exact_match;
        ++all;
        ok += joint_even_consistency(GroupIndexing(n, 2), p, budget).exact_match;
      }
    }
    out.push_back({"consistency/joint-product-maps", ok == all, detail::ratio_detail(ok, all)});
  }
  return out;
}

// Invariance of each partition law under its relabeling group.
inline std::vector<CheckResult> exchangeability_suite(const VerifyGrid& grid = {},
                                                      const EnumerationBudget& budget = {}) {
  std::vector<CheckResult> out;
  {
    long ok = 0, all = 0;
    for (int n = 2; n <= 6; ++n) {
      auto partitions = enumerate_partitions(n, budget);
      auto perms = enumerate_permutations(n, budget);
      for (const auto& p : grid.params) {
        ++all;
        bool good = true;
        for (const auto& b : partitions) {
          Rational reference = two_param_partition_pmf(b, p).exact_or_throw();
          for (const auto& s : perms)
            if (two_param_partition_pmf(b.relabeled(s.image()), p).exact_or_throw() != reference) {
              good = false;
              break;
            }
          if (!good) break;
        }
        ok += good;
      }
      for (const auto& a : grid.one_param_values) {
        ++all;
        bool good = true;
        for (const auto& b : partitions) {
          Rational reference = ewens_partition_pmf(b, a).exact_or_throw();
          for (const auto& s : perms)
            if (ewens_partition_pmf(b.relabeled(s.image()), a).exact_or_throw() != reference) {
              good = false;
              break;
            }
          if (!good) break;
        }
        ok += good;
      }
    }
    out.push_back({"exchangeability/ungrouped-laws", ok == all, detail::ratio_detail(ok, all)});
  }
  {
    // Type-preserving relabelings for the balanced law; arbitrary relabelings
    // for the even law.
    long ok = 0, all = 0;
    for (int order : grid.orders) {
      for (int n = 1; n * order <= 6; ++n) {
        GroupIndexing g(n, order);
        auto balanced = enumerate_balanced(g, budget);
        auto even = enumerate_even(n, order, budget);
        auto within_type = enumerate_permutations(n, budget);
        std::vector<std::vector<int>> type_preserving;
        std::vector<size_t> picks(static_cast<size_t>(order), 0);
        while (true) {
          std::vector<int> image(static_cast<size_t>(g.ground_size()));
          for (int t = 1; t <= order; ++t) {
            const Permutation& rho = within_type[picks[static_cast<size_t>(t - 1)]];
            for (int m = 1; m <= n; ++m)
              image[static_cast<size_t>((m - 1) * order + t - 1)] = (rho(m) - 1) * order + t;
          }
          type_preserving.push_back(std::move(image));
          size_t slot = 0;
          while (slot < picks.size() && ++picks[slot] == within_type.size()) picks[slot++] = 0;
          if (slot == picks.size()) break;
        }
        auto full = enumerate_permutations(g.ground_size(), budget);
        for (const auto& p : grid.params) {
          ++all;
          bool good = true;
          for (const auto& b : balanced) {
            Rational reference = balanced_partition_pmf(b, g, p).exact_or_throw();
            for (const auto& image : type_preserving)
              if (balanced_partition_pmf(b.relabeled(image), g, p).exact_or_throw() != reference) {
                good = false;
                break;
              }
            if (!good) break;
          }
          for (const auto& b : even) {
            if (!good) break;
            Rational reference = even_partition_pmf(b, g, p).exact_or_throw();
            for (const auto& s : full)
              if (even_partition_pmf(b.relabeled(s.image()), g, p).exact_or_throw() != reference) {
                good = false;
                break;
              }
          }
          ok += good;
        }
        for (const auto& lambda : grid.one_param_values) {
          ++all;
          bool good = true;
          for (const auto& b : balanced) {
            Rational reference = balanced_partition_limit_pmf(b, g, lambda).exact_or_throw();
            for (const auto& image : type_preserving)
              if (balanced_partition_limit_pmf(b.relabeled(image), g, lambda).exact_or_throw() !=
                  reference) {
                good = false;
                break;
              }
            if (!good) break;
          }
          for (const auto& b : even) {
            if (!good) break;
            Rational reference = even_partition_limit_pmf(b, g, lambda).exact_or_throw();
            for (const auto& s : full)
              if (even_partition_limit_pmf(b.relabeled(s.image()), g, lambda).exact_or_throw() !=
                  reference) {
                good = false;
                break;
              }
          }
          ok += good;
        }
      }
    }
    out.push_back({"exchangeability/grouped-laws", ok == all, detail::ratio_detail(ok, all)});
  }
  return out;
}

// Vanishing-kappa limits: at kappa = lambda/10^4 the two-parameter laws are
// within 10^-3 total variation of their one-parameter limits.
inline std::vector<CheckResult> limits_suite(const VerifyGrid& grid = {},
                                             const EnumerationBudget& budget = {}) {
  std::vector<CheckResult> out;
  const long scale = 10'000;
  Rational bound = make_rational(1, 1000);
  {
    long ok = 0, all = 0;
    for (const auto& lambda : grid.one_param_values) {
      ModelParams near = ModelParams::negative_kappa(lambda / scale, scale);
      for (int n = 1; n <= 6; ++n) {
        auto partitions = enumerate_partitions(n, budget);
        auto two_param = build_distribution(partitions, [&](const SetPartition& b) {
          return two_param_partition_pmf(b, near).exact_or_throw();
        });
        auto one_param = build_distribution(partitions, [&](const SetPartition& b) {
          return ewens_partition_pmf(b, lambda).exact_or_throw();
        });
        ++all;
        ok += total_variation(two_param, one_param) < bound;
      }
    }
    out.push_back({"limits/two-param-to-one-param", ok == all, detail::ratio_detail(ok, all)});
  }
  {
    long ok = 0, all = 0;
    for (const auto& lambda : grid.one_param_values) {
      ModelParams near = ModelParams::negative_kappa(lambda / scale, scale);
      for (int order : grid.orders) {
        for (int n = 1; n * order <= 6; ++n) {
          GroupIndexing g(n, order);
          auto balanced = enumerate_balanced(g, budget);
          auto law = build_distribution(balanced, [&](const SetPartition& b) {
            return balanced_partition_pmf(b, g, near).exact_or_throw();
          });
          auto limit = build_distribution(balanced, [&](const SetPartition& b) {
            return balanced_partition_limit_pmf(b, g, lambda).exact_or_throw();
          });
          ++all;
          ok += total_variation(law, limit) < bound;
        }
      }
    }
    out.push_back({"limits/balanced-to-limit", ok == all, detail::ratio_detail(ok, all)});
  }
  return out;
}

// The grouped laws at (alpha, theta) equal the assembled two-step laws at
// (alpha/order, theta/order), exactly.
inline std::vector<CheckResult> scaling_suite(const VerifyGrid& grid = {},
                                              const EnumerationBudget& budget = {}) {
  std::vector<CheckResult> out;
  long ok = 0, all = 0;
  for (int order : grid.orders) {
    for (int n = 1; n * order <= grid.max_ground; ++n) {
      GroupIndexing g(n, order);
      auto balanced = enumerate_balanced(g, budget);
      auto even = enumerate_even(n, order, budget);
      for (const auto& p : grid.params) {
        ModelParams scaled = p.scaled_down(order);
        ++all;
        bool good = true;
        for (const auto& b : balanced)
          if (balanced_partition_pmf(b, g, p).exact_or_throw() !=
              balanced_assembled_pmf(b, g, scaled).exact_or_throw()) {
            good = false;
            break;
          }
        ok += good;
        ++all;
        good = true;
        for (const auto& b : even)
          if (even_partition_pmf(b, g, p).exact_or_throw() !=
              even_assembled_pmf(b, g, scaled).exact_or_throw()) {
            good = false;
            break;
          }
        ok += good;
      }
    }
  }
  out.push_back({"scaling/grouped-vs-two-step", ok == all, detail::ratio_detail(ok, all)});
  return out;
}

// ---------------------------------------------------------------------------
// Sampler validation: empirical draws against the exact laws.
// ---------------------------------------------------------------------------

namespace detail {

template <typename DrawFn>
std::map<SetPartition, uint64_t> collect_partition_counts(uint64_t draws, DrawFn&& draw) {
  std::map<std::vector<int>, uint64_t> by_rgs;
  for (uint64_t t = 0; t < draws; ++t) ++by_rgs[draw().rgs()];
  std::map<SetPartition, uint64_t> out;
  for (const auto& [rgs, c] : by_rgs) out.emplace(SetPartition::from_rgs(rgs), c);
  return out;
}

inline std::string empirical_detail(const EmpiricalReport& r) {
  std::ostringstream os;
  os << "TV=" << to_double(r.tv) << " chi2=" << r.chi_square << " p=" << r.p_value;
  return os.str();
}

}  // namespace detail

// Empirical total variation below 0.01 and chi-square p above 1e-3 for every
// sampler, both regimes.
inline std::vector<CheckResult> sampler_suite(uint64_t draws = 1'000'000, uint64_t seed = 20240817,
                                              const EnumerationBudget& budget = {}) {
  std::vector<CheckResult> out;
  const Rational tv_bound = make_rational(1, 100);
  const double p_bound = 1e-3;
  std::vector<ModelParams> regimes{ModelParams::two_param(make_rational(1, 2), make_rational(1)),
                                   ModelParams::negative_kappa(make_rational(1, 2), 3)};
  uint64_t stream = 0;

  auto check = [&](const std::string& id, const std::map<SetPartition, uint64_t>& counts,
                   const ExactDist<SetPartition>& exact) {
    EmpiricalReport r = empirical_vs_exact(counts, exact);
    bool pass = r.tv < tv_bound && r.p_value > p_bound;
    out.push_back({id, pass, detail::empirical_detail(r)});
  };

  for (size_t ri = 0; ri < regimes.size(); ++ri) {
    const ModelParams& p = regimes[ri];
    std::string suffix = ri == 0 ? "/two-param" : "/negative-kappa";
    {
      RngHandle rng(seed, stream++);
      auto counts = detail::collect_partition_counts(draws, [&] { return crp_sample(6, p, rng); });
      auto exact = build_distribution(enumerate_partitions(6, budget), [&](const SetPartition& b) {
        return two_param_partition_pmf(b, p).exact_or_throw();
      });
      check("sampler/crp" + suffix, counts, exact);
    }
    for (auto [n, order] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}}) {
      GroupIndexing g(n, order);
      std::string dims = "-" + std::to_string(n) + "x" + std::to_string(order);
      {
        RngHandle rng(seed, stream++);
        auto counts = detail::collect_partition_counts(
            draws, [&] { return balanced_crp_sample(n, g, p, rng).first; });
        auto exact = build_distribution(enumerate_balanced(g, budget), [&](const SetPartition& b) {
          return balanced_partition_pmf(b, g, p).exact_or_throw();
        });
        check("sampler/balanced" + dims + suffix, counts, exact);
      }
      {
        RngHandle rng(seed, stream++);
        auto counts = detail::collect_partition_counts(
            draws, [&] { return even_crp_sample(n, g, p, rng).first; });
        auto exact = build_distribution(enumerate_even(n, order, budget), [&](const SetPartition& b) {
          return even_partition_pmf(b, g, p).exact_or_throw();
        });
        check("sampler/even" + dims + suffix, counts, exact);
      }
    }
    {
      // Two-step constructions at (3,2): the assembled partition follows the
      // assembled law; the group marginal follows the ungrouped law.
      GroupIndexing g(3, 2);
      RngHandle rng(seed, stream++);
      std::map<std::vector<int>, uint64_t> assembled_rgs, group_rgs;
      for (uint64_t t = 0; t < draws; ++t) {
        auto s = two_step_balanced_sample(3, g, p, rng);
        ++assembled_rgs[s.assembled.rgs()];
        ++group_rgs[s.group_partition.rgs()];
      }
      std::map<SetPartition, uint64_t> assembled_counts, group_counts;
      for (const auto& [rgs, c] : assembled_rgs) assembled_counts.emplace(SetPartition::from_rgs(rgs), c);
      for (const auto& [rgs, c] : group_rgs) group_counts.emplace(SetPartition::from_rgs(rgs), c);
      auto assembled_exact =
          build_distribution(enumerate_balanced(g, budget), [&](const SetPartition& b) {
            return balanced_assembled_pmf(b, g, p).exact_or_throw();
          });
      auto group_exact = build_distribution(enumerate_partitions(3, budget), [&](const SetPartition& b) {
        return two_param_partition_pmf(b, p).exact_or_throw();
      });
      check("sampler/two-step-balanced-assembled" + suffix, assembled_counts, assembled_exact);
      check("sampler/two-step-balanced-marginal" + suffix, group_counts, group_exact);
    }
    {
      GroupIndexing g(3, 2);
      RngHandle rng(seed, stream++);
      auto counts = detail::collect_partition_counts(
          draws, [&] { return two_step_even_sample(3, g, p, rng).assembled; });
      auto exact = build_distribution(enumerate_even(3, 2, budget), [&](const SetPartition& b) {
        return even_assembled_pmf(b, g, p).exact_or_throw();
      });
      check("sampler/two-step-even-assembled" + suffix, counts, exact);
    }
    {
      // Joint frequencies of (group partition, permutation) at order 1.
      GroupIndexing g(2, 1);
      RngHandle rng(seed, stream++);
      using Key = std::pair<std::vector<int>, std::vector<int>>;
      std::map<Key, uint64_t> raw;
      for (uint64_t t = 0; t < draws; ++t) {
        auto s = two_step_even_sample(2, g, p, rng);
        ++raw[{s.group_partition.rgs(), s.scramble.image()}];
      }
      using Tuple = std::pair<SetPartition, Permutation>;
      std::map<Tuple, uint64_t> counts;
      for (const auto& [key, c] : raw)
        counts.emplace(Tuple{SetPartition::from_rgs(key.first), Permutation(key.second)}, c);
      std::map<Tuple, Rational> table;
      for (const auto& pi : enumerate_partitions(2, budget))
        for (const auto& s : enumerate_permutations(2, budget))
          table[{pi, s}] = joint_even_pmf(pi, s, p).exact_or_throw();
      ExactDist<Tuple> exact(std::move(table));
      EmpiricalReport r = empirical_vs_exact(counts, exact);
      bool pass = r.tv < tv_bound && r.p_value > p_bound;
      out.push_back({"sampler/two-step-even-joint" + suffix, pass, detail::empirical_detail(r)});
    }
  }
  return out;
}

// Identical seeds must reproduce identical streams; traces must replay to the
// partitions they recorded.
inline std::vector<CheckResult> determinism_suite(uint64_t seed = 97) {
  std::vector<CheckResult> out;
  ModelParams p = ModelParams::two_param(make_rational(1, 2), make_rational(1));
  GroupIndexing g(3, 2);
  auto render_stream = [&]() {
    RngHandle rng(seed, 5);
    std::ostringstream os;
    for (int t = 0; t < 400; ++t) {
      auto [partition, trace] = balanced_crp_sample(3, g, p, rng);
      os << partition.to_string() << "\n";
      auto even = even_crp_sample(3, g, p, rng);
      os << even.first.to_string() << "\n";
      os << crp_sample(5, p, rng).to_string() << "\n";
    }
    return os.str();
  };
  std::string first = render_stream();
  std::string second = render_stream();
  out.push_back({"determinism/stream", first == second,
                 first == second ? "byte-identical across two runs" : "streams diverged"});

  bool replay_ok = true;
  RngHandle rng(seed, 6);
  for (int t = 0; t < 200 && replay_ok; ++t) {
    auto [partition, trace] = balanced_crp_sample(3, g, p, rng);
    replay_ok = replay_seating_trace(trace, SeatingRule::balanced) == partition;
    auto even = even_crp_sample(3, g, p, rng);
    replay_ok = replay_ok && replay_seating_trace(even.second, SeatingRule::even) == even.first;
  }
  out.push_back({"determinism/trace-replay", replay_ok,
                 replay_ok ? "traces rebuild their partitions" : "replay mismatch"});
  return out;
}

}  // namespace exparts
