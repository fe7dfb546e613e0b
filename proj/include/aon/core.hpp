#pragma once

#include <aon/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace aon {

using Index = std::size_t;

/// Item indices, ascending and without duplicates. Always refers to positions
/// in the caller's original instance.
using Support = std::vector<Index>;

struct Item {
  std::int64_t profit = 1;
  double prob = 0.0;

  friend bool operator==(const Item&, const Item&) = default;
};

struct Instance {
  std::vector<Item> items;

  std::size_t size() const noexcept { return items.size(); }
  const Item& operator[](Index i) const { return items[i]; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// A chosen subset together with its exact profit sum and objective value.
/// The empty support is legal and has value 0.
struct Solution {
  Support support;
  std::int64_t profit_sum = 0;
  double value = 0.0;
};

/// Items with p = 1 are always worth taking and items with p = 0 never are;
/// the residual instance keeps the rest (0 < p < 1).
struct NormalizationReport {
  Support forced_in;
  Support dropped;
  Instance residual;
  /// residual_index[k] is the original index of residual item k.
  std::vector<Index> residual_index;
};

inline void validate(const Instance& instance) {
  if (instance.items.empty()) {
    throw Error(ErrorCode::EmptyInstance, "instance has no items");
  }
  for (Index i = 0; i < instance.size(); ++i) {
    const Item& item = instance[i];
    if (item.profit < 1) {
      throw Error(ErrorCode::NonPositiveProfit,
                  "item " + std::to_string(i) + " has profit " + std::to_string(item.profit));
    }
    // NaN fails both comparisons and is rejected here as well.
    if (!(item.prob >= 0.0 && item.prob <= 1.0)) {
      throw Error(ErrorCode::ProbabilityOutOfRange,
                  "item " + std::to_string(i) + " has probability outside [0,1]");
    }
  }
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::CapacityOverflow, "profit sum exceeds 64-bit range");
  }
  return out;
}

inline void check_support(const Instance& instance, std::span<const Index> support) {
  for (Index i : support) {
    if (i >= instance.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + std::to_string(i) + " with n = " + std::to_string(instance.size()));
    }
  }
}

inline std::int64_t profit_sum(const Instance& instance, std::span<const Index> support) {
  check_support(instance, support);
  std::int64_t sum = 0;
  for (Index i : support) sum = checked_add(sum, instance[i].profit);
  return sum;
}

/// Product of probabilities, multiplied in the order given. Solvers produce
/// ascending supports, which matches the order the DP multiplies in.
inline double probability(const Instance& instance, std::span<const Index> support) {
  check_support(instance, support);
  double prod = 1.0;
  for (Index i : support) prod *= instance[i].prob;
  return prod;
}

/// (sum of profits) * (product of probabilities) over the support.
inline double objective(const Instance& instance, std::span<const Index> support) {
  if (support.empty()) return 0.0;
  const std::int64_t sum = profit_sum(instance, support);
  return static_cast<double>(sum) * probability(instance, support);
}

/// ln(sum of profits) + sum of ln p over the support.
inline double log_objective(const Instance& instance, std::span<const Index> support) {
  if (support.empty()) {
    throw Error(ErrorCode::EmptySupport, "log objective of the empty support is undefined");
  }
  const std::int64_t sum = profit_sum(instance, support);
  double acc = std::log(static_cast<double>(sum));
  for (Index i : support) {
    if (instance[i].prob <= 0.0) {
      throw Error(ErrorCode::ZeroProbabilityInSupport, "item " + std::to_string(i));
    }
    acc += std::log(instance[i].prob);
  }
  return acc;
}

inline Support canonical(Support support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return support;
}

inline Solution make_solution(const Instance& instance, Support support) {
  Solution s;
  s.support = canonical(std::move(support));
  s.profit_sum = profit_sum(instance, s.support);
  s.value = objective(instance, s.support);
  return s;
}

inline NormalizationReport normalize(const Instance& instance) {
  validate(instance);
  NormalizationReport report;
  for (Index i = 0; i < instance.size(); ++i) {
    const Item& item = instance[i];
    if (item.prob == 1.0) {
      report.forced_in.push_back(i);
    } else if (item.prob == 0.0) {
      report.dropped.push_back(i);
    } else {
      report.residual.items.push_back(item);
      report.residual_index.push_back(i);
    }
  }
  return report;
}

/// Maps residual indices back to original ones and adds the forced items.
inline Support lift(const NormalizationReport& report, std::span<const Index> residual_support) {
  Support out(report.forced_in.begin(), report.forced_in.end());
  for (Index k : residual_support) out.push_back(report.residual_index.at(k));
  return canonical(std::move(out));
}

}  // namespace aon
