#pragma once

#include <aon/core.hpp>
#include <aon/exact.hpp>
#include <aon/rational.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace aon {

/// Profit divisor. The exact rational is what scaled profits are floored
/// against; value() is for reporting and for the proxy objective.
struct Kappa {
  mpq_class exact;
  double value() const { return rational_to_double(exact); }
};

/// The scaled instance: floor(c_i / kappa) for every item, and the split into
/// items with p >= 1/2 (high) and the rest (low).
struct ScaledView {
  Kappa kappa;
  Epsilon epsilon;
  std::vector<std::int64_t> scaled_profits;
  Support high;
  Support low;
  std::int64_t cbar_high = 0;
};

enum class CandidateKind { Scaled, Singleton };

struct Candidate {
  CandidateKind kind = CandidateKind::Scaled;
  /// Low item enumerated alongside the scaled DP, or the singleton item.
  std::optional<Index> item;
  Support support;
  double true_value = 0.0;
  double proxy_value = 0.0;
};

struct FptasResult {
  Solution solution;
  double proxy_value = 0.0;
  Epsilon epsilon;
  std::size_t candidates_evaluated = 0;
  std::size_t table_cells = 0;
  std::size_t low_count = 0;
  std::vector<Candidate> candidates;
};

/// kappa = eps * max_i(p_i c_i) / n, computed exactly.
inline Kappa compute_kappa(const Instance& instance, const Epsilon& epsilon) {
  validate(instance);
  mpq_class best = 0;
  for (const Item& it : instance.items) {
    mpq_class pc = mpq_class(it.prob) * mpq_class(mpz_class(static_cast<long>(it.profit)));
    if (pc > best) best = pc;
  }
  if (best == 0) {
    throw Error(ErrorCode::BadDomain, "every item has zero expected profit");
  }
  Kappa k{epsilon.exact() * best / mpq_class(static_cast<unsigned long>(instance.size()))};
  k.exact.canonicalize();
  return k;
}

inline Kappa compute_kappa(const Instance& instance, double epsilon) {
  return compute_kappa(instance, Epsilon::from_double(epsilon));
}

inline ScaledView scale(const Instance& instance, const Kappa& kappa, const Epsilon& epsilon) {
  validate(instance);
  if (kappa.exact <= 0) throw Error(ErrorCode::BadDomain, "kappa must be positive");
  ScaledView view{kappa, epsilon, {}, {}, {}, 0};
  const std::size_t n = instance.size();
  // Scaled profits of high items never exceed ceil(2n/eps) when kappa comes
  // from compute_kappa, since c_i <= 2 p_i c_i <= 2 max pc.
  const mpz_class high_cap =
      ceil_of(mpq_class(static_cast<unsigned long>(2 * n)) / epsilon.exact());
  view.scaled_profits.reserve(n);
  for (Index i = 0; i < n; ++i) {
    const mpq_class ratio = mpq_class(mpz_class(static_cast<long>(instance[i].profit))) / kappa.exact;
    const mpz_class floored = floor_of(ratio);
    const bool high = instance[i].prob >= 0.5;
    if (high && floored > high_cap) {
      throw std::logic_error("scaled profit above ceil(2n/eps); kappa too small for this epsilon");
    }
    view.scaled_profits.push_back(to_int64(floored));
    (high ? view.high : view.low).push_back(i);
  }
  for (Index i : view.high) view.cbar_high = checked_add(view.cbar_high, view.scaled_profits[i]);
  return view;
}

namespace detail {

/// The scaled DP over the high items, built once and queried per extra item.
class HighTable {
 public:
  HighTable(const ScaledView& view, const Instance& instance) : view_(view) {
    profits_.reserve(view.high.size());
    probs_.reserve(view.high.size());
    for (Index i : view.high) {
      profits_.push_back(view.scaled_profits[i]);
      probs_.push_back(instance[i].prob);
    }
    table_ = build_table(profits_, probs_);
  }

  std::size_t cells() const noexcept { return table_.cells(); }

  /// max over C of (C + c^_extra) * P^(C) * p_extra, with the sentinel
  /// c^ = 0, p = 1 and C >= 1 when there is no extra item.
  std::pair<double, Support> best(const Instance& instance, std::optional<Index> extra) const {
    const std::size_t h = table_.items();
    std::int64_t bonus = 0;
    double factor = 1.0;
    std::int64_t first_c = 1;
    if (extra) {
      bonus = view_.scaled_profits[*extra];
      factor = instance[*extra].prob;
      first_c = 0;
    }
    std::int64_t best_c = -1;
    double best_value = 0.0;
    for (std::int64_t C = first_c; C <= table_.cbar(); ++C) {
      const double p = table_.prob(h, C);
      if (p <= 0.0) continue;
      const double v = static_cast<double>(checked_add(C, bonus)) * p * factor;
      if (best_c < 0 || v > best_value) {
        best_c = C;
        best_value = v;
      }
    }
    Support support;
    if (best_c > 0) {
      for (Index local : reconstruct_local(table_, profits_, best_c)) support.push_back(view_.high[local]);
    }
    if (extra) support.push_back(*extra);
    if (best_c < 0) best_value = 0.0;
    return {best_value, canonical(std::move(support))};
  }

 private:
  const ScaledView& view_;
  std::vector<std::int64_t> profits_;
  std::vector<double> probs_;
  DpTable table_;
};

}  // namespace detail

struct ScaledBest {
  double scaled_value = 0.0;
  Support support;
  std::size_t table_cells = 0;
};

/// Scaled DP over the high items of the view, optionally forcing in one low
/// item. The value is in scaled units; multiply by kappa for the proxy.
inline ScaledBest scaled_best_with_extra(const ScaledView& view, const Instance& instance,
                                         std::optional<Index> extra) {
  if (extra && !std::binary_search(view.low.begin(), view.low.end(), *extra)) {
    throw Error(ErrorCode::ExtraNotLow, "item " + std::to_string(*extra) + " is not a low-probability item");
  }
  detail::HighTable table(view, instance);
  auto [value, support] = table.best(instance, extra);
  return {value, std::move(support), table.cells()};
}

/// Approximation scheme: one scaled DP over the high items, evaluated with no
/// extra item and with each low item forced in, plus every singleton. All
/// candidates are ranked by their true objective.
inline FptasResult fptas_solve(const Instance& instance, const Epsilon& epsilon) {
  const NormalizationReport norm = normalize(instance);
  FptasResult result{{}, 0.0, epsilon, 0, 0, 0, {}};

  std::vector<bool> dropped(instance.size(), false);
  for (Index i : norm.dropped) dropped[i] = true;
  if (norm.dropped.size() == instance.size()) return result;

  const Kappa kappa = compute_kappa(instance, epsilon);
  const ScaledView view = scale(instance, kappa, epsilon);
  const detail::HighTable table(view, instance);
  result.table_cells = table.cells();
  for (Index j : view.low) result.low_count += dropped[j] ? 0 : 1;

  auto with_forced = [&](Support s) {
    s.insert(s.end(), norm.forced_in.begin(), norm.forced_in.end());
    return canonical(std::move(s));
  };

  auto add = [&](CandidateKind kind, std::optional<Index> item, Support support, double proxy) {
    Candidate c;
    c.kind = kind;
    c.item = item;
    c.support = with_forced(std::move(support));
    c.true_value = objective(instance, c.support);
    c.proxy_value = proxy;
    result.candidates.push_back(std::move(c));
  };

  const double kv = kappa.value();
  {
    auto [z, support] = table.best(instance, std::nullopt);
    add(CandidateKind::Scaled, std::nullopt, std::move(support), kv * z);
  }
  for (Index j : view.low) {
    if (dropped[j]) continue;
    auto [z, support] = table.best(instance, j);
    add(CandidateKind::Scaled, j, std::move(support), kv * z);
  }
  for (Index i = 0; i < instance.size(); ++i) {
    add(CandidateKind::Singleton, i, Support{i},
        static_cast<double>(instance[i].profit) * instance[i].prob);
  }

  const Candidate* best = &result.candidates.front();
  for (const Candidate& c : result.candidates) {
    if (c.true_value > best->true_value) best = &c;
  }
  result.candidates_evaluated = result.candidates.size();
  result.solution = make_solution(instance, best->support);
  result.proxy_value = best->proxy_value;
  return result;
}

inline FptasResult fptas_solve(const Instance& instance, double epsilon) {
  return fptas_solve(instance, Epsilon::from_double(epsilon));
}

}  // namespace aon
