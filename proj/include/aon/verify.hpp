#pragma once

// Randomized cross-checks between the solvers, plus the two structural
// properties every optimum must satisfy: at most one chosen item with p < 1/2,
// and when there is one, the other chosen items multiply to at least 1/2.

#include <aon/core.hpp>
#include <aon/exact.hpp>
#include <aon/fptas.hpp>
#include <aon/gen.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace aon {

inline bool relative_equal(double a, double b, double tol) {
  if (a == b) return true;
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

inline constexpr double kRelTol = 1e-12;

/// Number of chosen items with p < 1/2.
inline std::size_t low_probability_count(const Instance& instance, std::span<const Index> support) {
  std::size_t k = 0;
  for (Index i : support) k += instance[i].prob < 0.5 ? 1 : 0;
  return k;
}

/// For |S| >= 2 with least likely member l and p_l < 1/2, checks that the
/// remaining members multiply to at least 1/2. Vacuously true otherwise.
inline bool rest_product_bound_holds(const Instance& instance, std::span<const Index> support) {
  if (support.size() < 2) return true;
  Index l = support.front();
  for (Index i : support) {
    if (instance[i].prob < instance[l].prob) l = i;
  }
  if (instance[l].prob >= 0.5) return true;
  double rest = 1.0;
  for (Index i : support) {
    if (i != l) rest *= instance[i].prob;
  }
  return rest >= 0.5 * (1.0 - kRelTol);
}

struct Solvers {
  std::function<Solution(const Instance&)> brute = [](const Instance& i) { return brute_force(i); };
  std::function<Solution(const Instance&)> dp = [](const Instance& i) { return dp_solve(i); };
  std::function<FptasResult(const Instance&, const Epsilon&)> fptas =
      [](const Instance& i, const Epsilon& e) { return fptas_solve(i, e); };
};

struct CheckCount {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerifyReport {
  std::vector<CheckCount> checks;
  std::size_t instances = 0;
  /// First instance that failed any check, for replay.
  std::optional<Instance> failure;
  std::string failure_check;

  bool ok() const {
    for (const auto& c : checks) {
      if (c.failed != 0) return false;
    }
    return true;
  }

  CheckCount& check(const std::string& name) {
    for (auto& c : checks) {
      if (c.name == name) return c;
    }
    checks.push_back({name, 0, 0});
    return checks.back();
  }

  void record(const std::string& name, bool pass, const Instance& instance) {
    CheckCount& c = check(name);
    if (pass) {
      ++c.passed;
      return;
    }
    ++c.failed;
    if (!failure) {
      failure = instance;
      failure_check = name;
    }
  }
};

inline std::string ratio_check_name(const Epsilon& eps) { return "fptas_ratio[eps=" + eps.text() + "]"; }

/// Runs every check on one instance and accumulates into `report`.
inline void verify_instance(const Instance& instance, const std::vector<Epsilon>& eps,
                            const Solvers& solvers, VerifyReport& report) {
  ++report.instances;
  const Solution opt = solvers.brute(instance);
  const Solution dp = solvers.dp(instance);

  report.record("brute_vs_dp", relative_equal(opt.value, dp.value, kRelTol), instance);
  report.record("dp_support",
                dp.profit_sum == profit_sum(instance, dp.support) &&
                    relative_equal(objective(instance, dp.support), dp.value, kRelTol),
                instance);
  for (const Epsilon& e : eps) {
    const FptasResult r = solvers.fptas(instance, e);
    const double value = objective(instance, r.solution.support);
    const bool ok = value >= (1.0 - e.value()) * opt.value * (1.0 - kRelTol) &&
                    value <= opt.value * (1.0 + kRelTol) &&
                    relative_equal(value, r.solution.value, kRelTol);
    report.record(ratio_check_name(e), ok, instance);
  }
  report.record("at_most_one_low_item", low_probability_count(instance, opt.support) <= 1, instance);
  report.record("rest_product_at_least_half", rest_product_bound_holds(instance, opt.support), instance);
}

struct VerifyOptions {
  std::size_t trials = 500;
  std::uint64_t seed = 7;
  std::size_t n_min = 1;
  std::size_t n_max = 15;
  std::int64_t cmax = 30;
  ProbDist pdist = UniformProb{0.01, 0.99};
  std::vector<Epsilon> eps;
};

/// Trial t uses n drawn from [n_min, n_max] and instance seed seed + t, both
/// from a master generator seeded with `seed`, so trial order is fixed.
inline std::vector<Instance> trial_instances(const VerifyOptions& opt) {
  Rng master(opt.seed);
  std::vector<Instance> out;
  out.reserve(opt.trials);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const auto n = static_cast<std::size_t>(
        uniform_int(master, static_cast<std::int64_t>(opt.n_min), static_cast<std::int64_t>(opt.n_max)));
    out.push_back(generate(n, opt.cmax, opt.pdist, opt.seed + t));
  }
  return out;
}

inline VerifyReport run_verify(const VerifyOptions& opt, const Solvers& solvers = {}) {
  if (opt.n_max > 15 || opt.n_min < 1 || opt.n_min > opt.n_max) {
    throw Error(ErrorCode::BadDomain, "verify trials need 1 <= n_min <= n_max <= 15");
  }
  VerifyReport report;
  for (const Instance& inst : trial_instances(opt)) verify_instance(inst, opt.eps, solvers, report);
  return report;
}

}  // namespace aon
