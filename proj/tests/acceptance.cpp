// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <aon/aon.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace {

using namespace aon;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<Instance> criterion1_instances() {
  VerifyOptions opt;  // 500 trials, n in [1,15], c in [1,30], p in (0.01,0.99)
  return trial_instances(opt);
}

Outcome oracle_equivalence() {
  std::size_t bad = 0;
  const auto insts = criterion1_instances();
  for (const Instance& inst : insts) {
    if (!relative_equal(dp_solve(inst).value, brute_force(inst).value, 1e-12)) ++bad;
  }
  return {bad == 0, std::to_string(insts.size()) + " instances, " + std::to_string(bad) + " mismatches"};
}

Outcome fptas_guarantee() {
  VerifyOptions opt;
  opt.trials = 300;
  opt.seed = 1009;
  std::size_t bad = 0, trials = 0;
  double worst = 1.0;
  for (const Instance& inst : trial_instances(opt)) {
    const double opt_value = brute_force(inst).value;
    for (const char* e : {"0.5", "0.1", "0.01"}) {
      const Epsilon eps = Epsilon::parse(e);
      const double v = objective(inst, fptas_solve(inst, eps).solution.support);
      const double ratio = v / opt_value;
      worst = std::min(worst, ratio);
      ++trials;
      if (ratio < (1.0 - eps.value()) * (1.0 - kRelTol) || ratio > 1.0 + kRelTol) ++bad;
    }
  }
  return {bad == 0, std::to_string(trials) + " trials, " + std::to_string(bad) +
                        " outside [1-eps, 1], worst ratio " + std::to_string(worst)};
}

Outcome structure_theorems() {
  std::vector<Instance> insts = criterion1_instances();
  VerifyOptions mixed;
  mixed.trials = 200;
  mixed.seed = 2003;
  mixed.pdist = MixedProb{0.7};
  for (Instance& inst : trial_instances(mixed)) insts.push_back(std::move(inst));

  std::size_t supports = 0, low_bad = 0, rest_bad = 0;
  for (const Instance& inst : insts) {
    std::vector<Support> optima = oracle::optimal_supports(inst, 0.0);
    const Support chosen = brute_force(inst).support;
    if (std::find(optima.begin(), optima.end(), chosen) == optima.end()) optima.push_back(chosen);
    for (const Support& s : optima) {
      ++supports;
      if (low_probability_count(inst, s) > 1) ++low_bad;
      if (!rest_product_bound_holds(inst, s)) ++rest_bad;
    }
  }
  return {low_bad + rest_bad == 0, std::to_string(insts.size()) + " instances, " + std::to_string(supports) +
                                       " optimal supports, " + std::to_string(low_bad) + " with >1 low item, " +
                                       std::to_string(rest_bad) + " below the product bound"};
}

Outcome gap_sweep() {
  std::size_t bad = 0, pairs = 0;
  for (std::int64_t M = 2; M <= 1000; ++M) {
    const double fm = f_eval(static_cast<double>(M), M);
    const double gap = gap_bound(M);
    for (std::int64_t N = 1; N <= 3 * M; ++N) {
      if (N == M) continue;
      ++pairs;
      if (fm - f_eval(static_cast<double>(N), M) < gap) ++bad;
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " violations"};
}

Outcome reduction_soundness() {
  std::string detail;
  bool pass = true;

  const ReducedInstance worked = reduce({{1, 2, 3}, 4});
  const DecisionReport wr = decide({{1, 2, 3}, 4});
  bool floors_ok = true;
  for (Index i = 0; i < worked.size(); ++i) {
    const ia::Interval v = exp(-ia::Interval::ratio(worked.profits[i], 4, 128)) * ia::Interval::from_uint(288, 128);
    const auto fl = v.common_floor();
    floors_ok = floors_ok && fl && static_cast<std::uint64_t>(*fl) == worked.numerators[i];
  }
  const bool worked_ok = wr.feasible && wr.certified && worked.K == 288 &&
                         worked.numerators == std::vector<std::uint64_t>{224, 174, 136} && floors_ok;
  pass = pass && worked_ok;
  detail += std::string("worked instance ") + (worked_ok ? "ok" : "WRONG") + "; ";

  Rng rng(5);
  std::size_t mismatch = 0, uncertified = 0, feasible = 0, refined = 0;
  for (int t = 0; t < 200; ++t) {
    const std::int64_t M = uniform_int(rng, 1, 50);
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 10));
    std::vector<std::int64_t> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(uniform_int(rng, 1, M));
    const DecisionReport r = decide({w, M});
    const bool truth = oracle::subset_sum_feasible(w, M);
    feasible += truth;
    if (r.feasible != truth) ++mismatch;
    if (!r.certified) ++uncertified;
    if (!r.trivial && r.K != choose_K(reduce({w, M}).size(), M)) ++refined;
  }
  pass = pass && mismatch == 0 && uncertified == 0;
  detail += "200 instances (" + std::to_string(feasible) + " feasible), " + std::to_string(mismatch) +
            " mismatches, " + std::to_string(uncertified) + " uncertified, " + std::to_string(refined) +
            " needed K above 6nM^2";
  return {pass, detail};
}

Outcome work_bound() {
  BenchGrid g;
  g.ns = {20, 40, 80};
  g.methods = {Method::Fptas};
  g.eps = {Epsilon::parse("0.5"), Epsilon::parse("0.1")};
  const BenchResult r = run_bench(g);
  std::size_t bad = 0;
  std::string worst;
  double worst_frac = 0.0;
  for (const RunRecord& row : r.rows) {
    const double bound = fptas_cell_bound(row.n, row.epsilon->value(), row.low_count);
    const double frac = static_cast<double>(row.table_cells) / bound;
    if (frac > 1.0) ++bad;
    if (frac > worst_frac) worst_frac = frac;
  }
  return {bad == 0 && r.rows.size() == 6,
          std::to_string(r.rows.size()) + " runs, " + std::to_string(bad) +
              " over bound, max cells/bound " + std::to_string(worst_frac)};
}

Outcome rounding_envelope() {
  Rng rng(77);
  std::size_t checks = 0, bad = 0;
  for (int t = 0; t < 50; ++t) {
    const std::int64_t M = uniform_int(rng, 2, 50);
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 10));
    std::vector<std::int64_t> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(uniform_int(rng, 1, M));
    const ReducedInstance red = reduce({w, M});
    std::int64_t cmax = 0;
    for (auto c : red.profits) cmax = std::max(cmax, c);
    const ia::Interval bound = rounding_loss_bound(red.size(), cmax, M, red.K, 256);
    for (int s = 0; s < 100; ++s) {
      Support sup;
      for (Index i = 0; i < red.size(); ++i) {
        if (uniform_unit_open(rng) < 0.5) sup.push_back(i);
      }
      if (sup.empty()) sup.push_back(static_cast<Index>(uniform_int(rng, 0, static_cast<std::int64_t>(red.size()) - 1)));
      const ia::Interval loss = exact_log_objective(red, sup, 256) - rounded_log_objective(red, sup, 256);
      ++checks;
      if (!loss.certainly_nonnegative() || !loss.certainly_less(bound)) ++bad;
    }
  }
  return {bad == 0, std::to_string(checks) + " supports, " + std::to_string(bad) + " outside the envelope"};
}

struct Criterion {
  const char* name;
  double time_limit_s;  // <= 0 means none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 oracle equivalence (dp == brute, 500 instances)", 10.0, oracle_equivalence},
      {"2 fptas ratio in [1-eps, 1] (300 x 3 eps)", 60.0, fptas_guarantee},
      {"3 structure of optimal supports", 0.0, structure_theorems},
      {"4 gap sweep M in [2,1000], N in [1,3M]", 5.0, gap_sweep},
      {"5 reduction soundness (200 subset-sum instances)", 30.0, reduction_soundness},
      {"6 fptas table-cell work bound", 0.0, work_bound},
      {"7 rounding-loss envelope (50 x 100 supports)", 0.0, rounding_envelope},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail += "; over time limit of " + std::to_string(c.time_limit_s) + " s";
    }
    std::printf("%s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
