#pragma once

#include <aon/core.hpp>

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace aon {

/// P(i, C): the largest success probability of a subset of the first i items
/// whose profits sum to exactly C, with the take/skip decision that achieved
/// it. Row 0 is the empty prefix.
class DpTable {
 public:
  DpTable() = default;
  DpTable(std::size_t items, std::int64_t cbar)
      : items_(items),
        cbar_(cbar),
        probs_((items + 1) * (static_cast<std::size_t>(cbar) + 1), 0.0),
        took_(probs_.size(), 0) {}

  std::size_t items() const noexcept { return items_; }
  std::int64_t cbar() const noexcept { return cbar_; }
  std::size_t cells() const noexcept { return probs_.size(); }

  double prob(std::size_t i, std::int64_t c) const { return probs_[offset(i, c)]; }
  bool took(std::size_t i, std::int64_t c) const { return took_[offset(i, c)] != 0; }

  void set(std::size_t i, std::int64_t c, double p, bool take) {
    probs_[offset(i, c)] = p;
    took_[offset(i, c)] = take ? 1 : 0;
  }

 private:
  std::size_t offset(std::size_t i, std::int64_t c) const {
    return i * (static_cast<std::size_t>(cbar_) + 1) + static_cast<std::size_t>(c);
  }

  std::size_t items_ = 0;
  std::int64_t cbar_ = 0;
  std::vector<double> probs_;
  std::vector<std::uint8_t> took_;
};

namespace detail {

inline std::int64_t total_profit(std::span<const std::int64_t> profits) {
  std::int64_t sum = 0;
  for (std::int64_t c : profits) sum = checked_add(sum, c);
  return sum;
}

inline void check_table_size(std::size_t items, std::int64_t cbar) {
  std::size_t cols = 0;
  std::size_t cells = 0;
  std::size_t bytes = 0;
  if (__builtin_add_overflow(static_cast<std::size_t>(cbar), std::size_t{1}, &cols) ||
      __builtin_mul_overflow(items + 1, cols, &cells) ||
      __builtin_mul_overflow(cells, sizeof(double) + 1, &bytes) ||
      bytes > static_cast<std::size_t>(std::numeric_limits<std::ptrdiff_t>::max())) {
    throw Error(ErrorCode::CapacityOverflow,
                "DP table of " + std::to_string(items + 1) + " x (" + std::to_string(cbar) +
                    " + 1) cells is not addressable");
  }
}

/// Builds the exact-profit table. Profits may be zero here (the scaled
/// instances of the approximation scheme produce them); the DP only needs
/// them non-negative. Item i is taken iff c_i <= C and the take branch is
/// strictly larger, so ties prefer skipping.
inline DpTable build_table(std::span<const std::int64_t> profits, std::span<const double> probs) {
  const std::size_t n = profits.size();
  const std::int64_t cbar = total_profit(profits);
  check_table_size(n, cbar);
  DpTable table(n, cbar);
  table.set(0, 0, 1.0, false);
  std::int64_t reach = 0;  // largest C reachable with the current prefix
  for (std::size_t i = 1; i <= n; ++i) {
    const std::int64_t c = profits[i - 1];
    const double p = probs[i - 1];
    reach += c;
    for (std::int64_t C = 0; C <= reach; ++C) {
      const double skip = table.prob(i - 1, C);
      if (c <= C) {
        const double take = p * table.prob(i - 1, C - c);
        if (take > skip) {
          table.set(i, C, take, true);
          continue;
        }
      }
      table.set(i, C, skip, false);
    }
  }
  return table;
}

/// Walks the take flags from the last item down; returns local positions.
inline Support reconstruct_local(const DpTable& table, std::span<const std::int64_t> profits,
                                 std::int64_t C) {
  if (C < 0 || C > table.cbar() || table.prob(table.items(), C) <= 0.0) {
    throw Error(ErrorCode::UnreachableProfit,
                "no subset with positive probability has profit " + std::to_string(C));
  }
  Support out;
  for (std::size_t i = table.items(); i >= 1; --i) {
    if (table.took(i, C)) {
      out.push_back(i - 1);
      C -= profits[i - 1];
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline std::vector<std::int64_t> profits_of(const Instance& instance) {
  std::vector<std::int64_t> out;
  out.reserve(instance.size());
  for (const Item& it : instance.items) out.push_back(it.profit);
  return out;
}

inline std::vector<double> probs_of(const Instance& instance) {
  std::vector<double> out;
  out.reserve(instance.size());
  for (const Item& it : instance.items) out.push_back(it.prob);
  return out;
}

}  // namespace detail

inline constexpr std::size_t kMaxEnumerationItems = 25;

/// Exhaustive search over all 2^n subsets. Ties go to the smaller profit sum,
/// then to the lexicographically smaller support.
inline Solution brute_force(const Instance& instance) {
  validate(instance);
  const std::size_t n = instance.size();
  if (n > kMaxEnumerationItems) {
    throw Error(ErrorCode::TooLargeForEnumeration,
                "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxEnumerationItems));
  }
  Solution best;  // empty support, value 0
  Support current;
  current.reserve(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    current.clear();
    std::int64_t sum = 0;
    double prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        current.push_back(i);
        sum = checked_add(sum, instance[i].profit);
        prod *= instance[i].prob;
      }
    }
    const double value = static_cast<double>(sum) * prod;
    bool better = value > best.value;
    if (!better && value == best.value) {
      better = sum < best.profit_sum ||
               (sum == best.profit_sum &&
                std::lexicographical_compare(current.begin(), current.end(), best.support.begin(),
                                             best.support.end()));
      // Keep the empty support when nothing beats value 0.
      if (value == 0.0) better = false;
    }
    if (better) {
      best.support = current;
      best.profit_sum = sum;
      best.value = value;
    }
  }
  return best;
}

inline DpTable build_dp(const Instance& instance) {
  validate(instance);
  const auto profits = detail::profits_of(instance);
  const auto probs = detail::probs_of(instance);
  return detail::build_table(profits, probs);
}

inline Support reconstruct(const DpTable& table, const Instance& instance, std::int64_t C) {
  if (table.items() != instance.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "table was built for a different instance");
  }
  const auto profits = detail::profits_of(instance);
  return detail::reconstruct_local(table, profits, C);
}

/// argmax over C of C * P(n, C) on a built table; smallest C wins ties.
/// Returns 0 when every C >= 1 has probability 0.
inline std::int64_t best_profit_level(const DpTable& table) {
  const std::size_t n = table.items();
  std::int64_t best_c = 0;
  double best_value = 0.0;
  for (std::int64_t C = 1; C <= table.cbar(); ++C) {
    const double v = static_cast<double>(C) * table.prob(n, C);
    if (v > best_value) {
      best_value = v;
      best_c = C;
    }
  }
  return best_c;
}

inline Solution dp_solve(const Instance& instance, const DpTable& table) {
  const std::int64_t C = best_profit_level(table);
  Solution s;
  if (C == 0) return s;
  s.support = reconstruct(table, instance, C);
  s.profit_sum = C;
  s.value = static_cast<double>(C) * table.prob(table.items(), C);
  return s;
}

inline Solution dp_solve(const Instance& instance) {
  const DpTable table = build_dp(instance);
  return dp_solve(instance, table);
}

}  // namespace aon
