#pragma once

// Executable form of the subset-sum hardness construction: weights c_i and a
// target M become items with profit c_i and probability floor(K e^{-c_i/M})/K,
// and a subset sums to M iff the optimal log objective of that instance
// exceeds max{f(M-1), f(M+1)} where f(y) = ln y - y/M.

#include <aon/core.hpp>
#include <aon/exact.hpp>
#include <aon/interval.hpp>

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aon {

struct SubsetSumInstance {
  std::vector<std::int64_t> weights;
  std::int64_t target = 1;
};

struct ReducedInstance {
  std::vector<std::int64_t> profits;
  /// probs[i] = numerators[i] / K exactly.
  std::vector<std::uint64_t> numerators;
  std::uint64_t K = 1;
  /// Positions of input weights larger than the target.
  Support dropped;
  /// source_index[i] is the input position of reduced item i.
  std::vector<Index> source_index;
  std::int64_t target = 1;

  std::size_t size() const noexcept { return profits.size(); }

  mpq_class prob(Index i) const {
    mpq_class q(mpz_class(static_cast<unsigned long>(numerators.at(i))),
                mpz_class(static_cast<unsigned long>(K)));
    q.canonicalize();
    return q;
  }

  /// Floating view for the double-precision solvers.
  Instance to_instance() const {
    Instance out;
    out.items.reserve(size());
    for (Index i = 0; i < size(); ++i) {
      out.items.push_back({profits[i], static_cast<double>(numerators[i]) / static_cast<double>(K)});
    }
    return out;
  }
};

struct DecisionReport {
  bool feasible = false;
  /// Log objective of the optimum of the reduced instance (midpoint of the
  /// certified enclosure).
  double optimal_log_value = 0.0;
  double threshold = 0.0;
  double margin = 0.0;
  /// Half-widths of both enclosures plus the floating DP error allowance.
  double error_bound = 0.0;
  bool certified = false;
  /// Decided without the reduction (M = 1, or every weight exceeds M).
  bool trivial = false;
  /// Denominator actually used: 6nM^2, doubled until the answer is certified.
  std::uint64_t K = 0;
  long precision_bits = 0;
  /// Optimal support of the reduced instance, in input weight positions.
  Support support;
  std::int64_t profit_sum = 0;
};

inline void validate(const SubsetSumInstance& ss) {
  if (ss.target < 1) throw Error(ErrorCode::BadDomain, "target must be a positive integer");
  for (std::int64_t w : ss.weights) {
    if (w < 1) throw Error(ErrorCode::BadDomain, "weights must be positive integers");
  }
}

inline double f_eval(double y, std::int64_t M) {
  if (!(y > 0.0) || M < 2) throw Error(ErrorCode::BadDomain, "f needs y > 0 and M >= 2");
  return std::log(y) - y / static_cast<double>(M);
}

/// Lower bound on f(M) - f(N) over integers N != M.
inline double gap_bound(std::int64_t M) {
  if (M < 2) throw Error(ErrorCode::BadDomain, "gap bound needs M >= 2");
  const double m = static_cast<double>(M);
  return 1.0 / (5.0 * m * m);
}

/// 5nM^2 / (1 - 1/(10nM^2)): any K strictly above this is admissible.
inline mpq_class rounding_constant_floor(std::uint64_t n, std::int64_t M) {
  const mpz_class x = mpz_class(static_cast<unsigned long>(n)) * M * M;
  mpq_class q(5 * x * 10 * x, 10 * x - 1);
  q.canonicalize();
  return q;
}

inline std::uint64_t choose_K(std::uint64_t n, std::int64_t M) {
  if (n < 1 || M < 2) throw Error(ErrorCode::BadDomain, "choose_K needs n >= 1 and M >= 2");
  std::uint64_t m2 = 0;
  std::uint64_t k = 0;
  const auto um = static_cast<std::uint64_t>(M);
  if (__builtin_mul_overflow(um, um, &m2) || __builtin_mul_overflow(m2, n, &k) ||
      __builtin_mul_overflow(k, std::uint64_t{6}, &k) || k > static_cast<std::uint64_t>(INT64_MAX)) {
    throw Error(ErrorCode::Overflow, "6 n M^2 exceeds 64-bit range");
  }
  if (!(mpq_class(mpz_class(static_cast<unsigned long>(k))) > rounding_constant_floor(n, M))) {
    throw std::logic_error("6nM^2 does not exceed the admissibility bound");
  }
  return k;
}

inline constexpr long kMinPrecision = 64;
inline constexpr long kMaxPrecision = 1 << 14;

/// floor(K * e^{-c/M}). The product is irrational, so refining the enclosure
/// eventually separates it from every integer.
inline std::uint64_t floor_scaled_exp(std::int64_t c, std::int64_t M, std::uint64_t K) {
  for (long prec = kMinPrecision; prec <= kMaxPrecision; prec *= 2) {
    const ia::Interval x = -ia::Interval::ratio(c, M, prec);
    const ia::Interval v = exp(x) * ia::Interval::from_uint(K, prec);
    if (auto f = v.common_floor()) return static_cast<std::uint64_t>(*f);
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "could not isolate floor(K e^{-c/M}) for c = " + std::to_string(c));
}

/// Reduction with an explicit denominator K >= 6nM^2. decide uses this to
/// refine the rounding when 6nM^2 cannot certify an infeasible answer.
inline ReducedInstance reduce(const SubsetSumInstance& ss, std::optional<std::uint64_t> K_override) {
  validate(ss);
  if (ss.target < 2) throw Error(ErrorCode::TargetTooSmall, "reduction needs M >= 2");
  ReducedInstance out;
  out.target = ss.target;
  for (Index i = 0; i < ss.weights.size(); ++i) {
    if (ss.weights[i] > ss.target) {
      out.dropped.push_back(i);
    } else {
      out.profits.push_back(ss.weights[i]);
      out.source_index.push_back(i);
    }
  }
  if (out.profits.empty()) {
    throw Error(ErrorCode::AllWeightsExceedTarget, "no weight is at most the target");
  }
  out.K = choose_K(out.profits.size(), ss.target);
  if (K_override) {
    if (*K_override < out.K) throw Error(ErrorCode::BadDomain, "K below 6nM^2");
    out.K = *K_override;
  }
  for (std::int64_t c : out.profits) {
    const std::uint64_t k = floor_scaled_exp(c, ss.target, out.K);
    if (k == 0 || k >= out.K) throw std::logic_error("rounded probability left (0,1)");
    out.numerators.push_back(k);
  }
  return out;
}

inline ReducedInstance reduce(const SubsetSumInstance& ss) { return reduce(ss, std::nullopt); }

/// max{ln(M-1) - (M-1)/M, ln(M+1) - (M+1)/M}.
inline ia::Interval threshold_enclosure(std::int64_t M, long prec) {
  if (M < 2) throw Error(ErrorCode::BadDomain, "threshold needs M >= 2");
  const auto side = [&](std::int64_t y) {
    return log(ia::Interval::from_int(y, prec)) - ia::Interval::ratio(y, M, prec);
  };
  return max(side(M - 1), side(M + 1));
}

inline double threshold(std::int64_t M) { return threshold_enclosure(M, 128).mid_double(); }

/// ln(sum c) + sum ln(k_i / K) over a non-empty support of the reduced instance.
inline ia::Interval rounded_log_objective(const ReducedInstance& red, std::span<const Index> support,
                                          long prec) {
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "log objective of the empty support");
  std::int64_t sum = 0;
  for (Index i : support) sum = checked_add(sum, red.profits.at(i));
  ia::Interval acc = log(ia::Interval::from_int(sum, prec));
  for (Index i : support) acc = acc + log(ia::Interval::from_rational(red.prob(i), prec));
  return acc;
}

/// ln(sum c) - sum c / M: the log objective with the unrounded e^{-c_i/M}.
inline ia::Interval exact_log_objective(const ReducedInstance& red, std::span<const Index> support,
                                        long prec) {
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "log objective of the empty support");
  std::int64_t sum = 0;
  for (Index i : support) sum = checked_add(sum, red.profits.at(i));
  return log(ia::Interval::from_int(sum, prec)) - ia::Interval::ratio(sum, red.target, prec);
}

/// -n ln(1 - e^{c_max/M} / K): the worst-case loss in log objective caused by
/// rounding the probabilities down to multiples of 1/K.
inline ia::Interval rounding_loss_bound(std::size_t n, std::int64_t c_max, std::int64_t M,
                                        std::uint64_t K, long prec) {
  const ia::Interval one = ia::Interval::from_int(1, prec);
  const ia::Interval e = exp(ia::Interval::ratio(c_max, M, prec));
  const ia::Interval inner = one - e / ia::Interval::from_uint(K, prec);
  return -(ia::Interval::from_uint(n, prec) * log(inner));
}

/// Decides subset sum through the reduction and the exact DP, with the final
/// comparison certified by interval arithmetic.
inline DecisionReport decide(const SubsetSumInstance& ss) {
  validate(ss);
  DecisionReport report;
  report.certified = true;
  if (ss.target == 1) {
    report.trivial = true;
    for (Index i = 0; i < ss.weights.size(); ++i) {
      if (ss.weights[i] == 1) {
        report.feasible = true;
        report.support = {i};
        report.profit_sum = 1;
        break;
      }
    }
    return report;
  }
  ReducedInstance red;
  try {
    red = reduce(ss);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AllWeightsExceedTarget) throw;
    report.trivial = true;
    return report;
  }
  std::int64_t cmax = 0;
  for (std::int64_t c : red.profits) cmax = std::max(cmax, c);

  // A subset summing to M keeps ln M - 1 minus at most the rounding loss, so
  // "optimum below tau" only proves infeasibility when that loss stays under
  // f(M) - tau. When 6nM^2 is too coarse for that, K is doubled.
  enum class Outcome { Feasible, Infeasible, CoarseK };
  Solution sol;
  for (;;) {
    report.K = red.K;
    const Instance inst = red.to_instance();
    sol = dp_solve(inst);
    // Floating DP error: the best subset found is within a factor
    // ((1+u)/(1-u))^{2n+1} of the true optimum, u = 2^-53.
    const double n = static_cast<double>(red.size());
    const double dp_slack = (8.0 * n + 8.0) * std::ldexp(1.0, -53);

    std::optional<Outcome> outcome;
    for (long prec = kMinPrecision; prec <= kMaxPrecision && !outcome; prec *= 2) {
      const ia::Interval lv = rounded_log_objective(red, sol.support, prec);
      const ia::Interval tau = threshold_enclosure(ss.target, prec);
      const double half_widths = 0.5 * (lv.width() + tau.width());
      report.optimal_log_value = lv.mid_double();
      report.threshold = tau.mid_double();
      report.margin = std::fabs(report.optimal_log_value - report.threshold);
      report.precision_bits = prec;
      if (lv.certainly_greater(tau)) {
        report.error_bound = half_widths;
        outcome = Outcome::Feasible;
        break;
      }
      const ia::Interval upper = lv + ia::Interval::from_rational(mpq_class(dp_slack), prec);
      if (upper.certainly_less(tau)) {
        const ia::Interval peak = log(ia::Interval::from_int(ss.target, prec)) - ia::Interval::from_int(1, prec);
        const ia::Interval floor_if_feasible = peak - rounding_loss_bound(red.size(), cmax, ss.target, red.K, prec);
        if (floor_if_feasible.certainly_greater(tau)) {
          report.error_bound = half_widths + dp_slack;
          outcome = Outcome::Infeasible;
        } else if (floor_if_feasible.certainly_less(tau) || prec * 2 > kMaxPrecision) {
          outcome = Outcome::CoarseK;
        }
      }
    }
    if (!outcome) {
      throw Error(ErrorCode::PrecisionExhausted,
                  "optimal log value and threshold are not separable for M = " + std::to_string(ss.target));
    }
    if (*outcome != Outcome::CoarseK) {
      report.feasible = *outcome == Outcome::Feasible;
      break;
    }
    if (red.K > static_cast<std::uint64_t>(INT64_MAX) / 2) {
      throw Error(ErrorCode::Overflow, "refined K exceeds 64-bit range");
    }
    red = reduce(ss, red.K * 2);
  }
  for (Index k : sol.support) report.support.push_back(red.source_index[k]);
  report.profit_sum = sol.profit_sum;
  return report;
}

}  // namespace aon
