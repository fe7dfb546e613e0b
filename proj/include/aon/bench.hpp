#pragma once

#include <aon/core.hpp>
#include <aon/exact.hpp>
#include <aon/fptas.hpp>
#include <aon/gen.hpp>
#include <aon/verify.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace aon {

enum class Method { Brute, Dp, Fptas };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::Brute: return "brute";
    case Method::Dp: return "dp";
    case Method::Fptas: return "fptas";
  }
  return "?";
}

inline Method parse_method(std::string_view s) {
  if (s == "brute") return Method::Brute;
  if (s == "dp") return Method::Dp;
  if (s == "fptas") return Method::Fptas;
  throw Error(ErrorCode::ParseError, "unknown method '" + std::string(s) + "'");
}

struct RunRecord {
  Method method = Method::Dp;
  std::size_t n = 0;
  std::int64_t cmax = 0;
  std::optional<Epsilon> epsilon;
  std::uint64_t seed = 0;
  double value = 0.0;
  std::int64_t profit_sum = 0;
  std::int64_t wall_time_us = 0;
  std::size_t table_cells = 0;
  /// Low-probability items seen by the approximation scheme (0 otherwise).
  std::size_t low_count = 0;
};

struct BenchGrid {
  std::vector<std::size_t> ns;
  std::vector<std::int64_t> cmaxes = {100};
  std::vector<Epsilon> eps;
  std::vector<Method> methods = {Method::Dp};
  std::uint64_t seed = 1;
  ProbDist pdist = UniformProb{0.01, 0.99};
};

struct BenchResult {
  std::vector<RunRecord> rows;
  /// Instances with n <= 15 where brute and dp disagree, or fptas misses (1-eps) of dp.
  std::size_t cross_method_violations = 0;
  /// Rows whose fptas table exceeds (n+1)(2n^2/eps + n + 1)(|low| + 1).
  std::size_t work_bound_violations = 0;
};

/// (n+1)(2n^2/eps + n + 1)(low+1), rounded down.
inline double fptas_cell_bound(std::size_t n, double eps, std::size_t low) {
  const double nn = static_cast<double>(n);
  return (nn + 1.0) * (2.0 * nn * nn / eps + nn + 1.0) * (static_cast<double>(low) + 1.0);
}

inline RunRecord run_method(Method method, const Instance& instance, const std::optional<Epsilon>& eps) {
  RunRecord r;
  r.method = method;
  r.n = instance.size();
  const auto start = std::chrono::steady_clock::now();
  switch (method) {
    case Method::Brute: {
      const Solution s = brute_force(instance);
      r.value = s.value;
      r.profit_sum = s.profit_sum;
      break;
    }
    case Method::Dp: {
      const DpTable table = build_dp(instance);
      const Solution s = dp_solve(instance, table);
      r.value = s.value;
      r.profit_sum = s.profit_sum;
      r.table_cells = table.cells();
      break;
    }
    case Method::Fptas: {
      const FptasResult f = fptas_solve(instance, *eps);
      r.value = f.solution.value;
      r.profit_sum = f.solution.profit_sum;
      r.table_cells = f.table_cells;
      r.low_count = f.low_count;
      r.epsilon = eps;
      break;
    }
  }
  r.wall_time_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return r;
}

/// Rows are ordered by n, then cmax, then method as listed (fptas once per eps).
/// Instance k of the grid uses seed + k. Brute force is skipped above 25 items.
inline BenchResult run_bench(const BenchGrid& grid) {
  BenchResult out;
  std::uint64_t k = 0;
  for (std::size_t n : grid.ns) {
    for (std::int64_t cmax : grid.cmaxes) {
      const std::uint64_t seed = grid.seed + k++;
      const Instance inst = generate(n, cmax, grid.pdist, seed);
      std::optional<double> brute;
      std::optional<double> dp;
      std::vector<std::pair<double, double>> fptas;  // (value, eps)
      for (Method m : grid.methods) {
        if (m == Method::Brute && n > kMaxEnumerationItems) continue;
        std::vector<std::optional<Epsilon>> eps_list = {std::nullopt};
        if (m == Method::Fptas) eps_list.assign(grid.eps.begin(), grid.eps.end());
        for (const auto& e : eps_list) {
          RunRecord r = run_method(m, inst, e);
          r.cmax = cmax;
          r.seed = seed;
          if (m == Method::Brute) brute = r.value;
          if (m == Method::Dp) dp = r.value;
          if (m == Method::Fptas) {
            fptas.emplace_back(r.value, e->value());
            if (static_cast<double>(r.table_cells) > fptas_cell_bound(n, e->value(), r.low_count)) {
              ++out.work_bound_violations;
            }
          }
          out.rows.push_back(std::move(r));
        }
      }
      if (n <= 15 && dp) {
        bool ok = !brute || relative_equal(*brute, *dp, kRelTol);
        for (auto [v, e] : fptas) ok = ok && v >= (1.0 - e) * *dp * (1.0 - kRelTol);
        if (!ok) ++out.cross_method_violations;
      }
    }
  }
  return out;
}

inline std::string bench_csv(const std::vector<RunRecord>& rows) {
  std::string out = "method,n,cmax,epsilon,seed,value,profit_sum,wall_time_us,table_cells\n";
  char value[40];
  for (const RunRecord& r : rows) {
    std::snprintf(value, sizeof value, "%.17g", r.value);
    out += to_string(r.method) + "," + std::to_string(r.n) + "," + std::to_string(r.cmax) + "," +
           (r.epsilon ? r.epsilon->text() : std::string()) + "," + std::to_string(r.seed) + "," + value +
           "," + std::to_string(r.profit_sum) + "," + std::to_string(r.wall_time_us) + "," +
           std::to_string(r.table_cells) + "\n";
  }
  return out;
}

}  // namespace aon
