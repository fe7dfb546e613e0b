#pragma once

// Test-only oracles. These deliberately avoid the library's solvers and use
// plain recursion / bit tricks so they can check them independently.

#include <aon/core.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace aon::oracle {

/// Calls fn(support) for every subset of {0..n-1}, supports ascending.
inline void for_each_subset(std::size_t n, const std::function<void(const Support&)>& fn) {
  Support cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      fn(cur);
      return;
    }
    rec(i + 1);
    cur.push_back(i);
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
}

/// Best objective value over all subsets, computed by recursion.
inline double best_value(const Instance& inst) {
  double best = 0.0;
  for_each_subset(inst.size(), [&](const Support& s) {
    std::int64_t c = 0;
    double p = 1.0;
    for (Index i : s) {
      c += inst[i].profit;
      p *= inst[i].prob;
    }
    if (!s.empty()) best = std::max(best, static_cast<double>(c) * p);
  });
  return best;
}

/// All supports achieving the optimum to within relative tol.
inline std::vector<Support> optimal_supports(const Instance& inst, double tol = 1e-12) {
  const double best = best_value(inst);
  std::vector<Support> out;
  for_each_subset(inst.size(), [&](const Support& s) {
    if (s.empty()) return;
    std::int64_t c = 0;
    double p = 1.0;
    for (Index i : s) {
      c += inst[i].profit;
      p *= inst[i].prob;
    }
    if (static_cast<double>(c) * p >= best * (1.0 - tol)) out.push_back(s);
  });
  return out;
}

/// Max probability over subsets of the first `prefix` items with profit sum
/// exactly C (0 when none).
inline double max_prob_exact_profit(const std::vector<std::int64_t>& profits, const std::vector<double>& probs,
                                    std::size_t prefix, std::int64_t C) {
  double best = 0.0;
  for_each_subset(prefix, [&](const Support& s) {
    std::int64_t c = 0;
    double p = 1.0;
    for (Index i : s) {
      c += profits[i];
      p *= probs[i];
    }
    if (c == C) best = std::max(best, p);
  });
  return best;
}

/// Classic boolean subset-sum DP.
inline bool subset_sum_feasible(const std::vector<std::int64_t>& weights, std::int64_t target) {
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (std::int64_t w : weights) {
    for (std::int64_t t = target; t >= w; --t) {
      if (reach[static_cast<std::size_t>(t - w)]) reach[static_cast<std::size_t>(t)] = 1;
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

}  // namespace aon::oracle
