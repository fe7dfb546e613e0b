// Command-line front end: gen, solve, verify, reduce, decide, bench.
//
// Exit codes: 0 ok, 2 bad input, 3 enumeration budget exceeded,
// 4 property violation, 5 precision exhausted.

#include <aon/aon.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using aon::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitProperty = 4;
constexpr int kExitPrecision = 5;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw aon::Error(aon::ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !(out.flush())) {
    throw aon::Error(aon::ErrorCode::ParseError, "cannot write '" + path + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t to_int(const std::string& s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw aon::Error(aon::ErrorCode::ParseError, "not an integer: '" + s + "'");
  }
  return v;
}

std::vector<std::int64_t> int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& s : split(text, ',')) out.push_back(to_int(s));
  return out;
}

/// "20,40,80" or "lo:hi:step" (inclusive).
std::vector<std::size_t> size_grid(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw aon::Error(aon::ErrorCode::ParseError, "range must be lo:hi:step");
    const std::int64_t lo = to_int(parts[0]), hi = to_int(parts[1]), step = to_int(parts[2]);
    if (lo < 1 || step < 1) throw aon::Error(aon::ErrorCode::ParseError, "range needs lo >= 1, step >= 1");
    for (std::int64_t v = lo; v <= hi; v += step) out.push_back(static_cast<std::size_t>(v));
    return out;
  }
  for (std::int64_t v : int_list(text)) {
    if (v < 1) throw aon::Error(aon::ErrorCode::ParseError, "sizes must be positive");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<aon::Epsilon> eps_list(const std::string& text) {
  std::vector<aon::Epsilon> out;
  for (const auto& s : split(text, ',')) out.push_back(aon::Epsilon::parse(s));
  return out;
}

json solution_json(const aon::Solution& s) {
  return {{"support", s.support}, {"profit_sum", s.profit_sum}, {"value", s.value}};
}

struct GenArgs {
  std::size_t n = 0;
  std::int64_t cmax = 0;
  std::string pdist = "uniform(0.01,0.99)";
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const aon::Instance inst = aon::generate(a.n, a.cmax, aon::parse_prob_dist(a.pdist), a.seed);
  write_output(a.out, aon::write_instance(inst));
  return kExitOk;
}

struct SolveArgs {
  std::string file;
  std::string method;
  std::string eps;
};

int cmd_solve(const SolveArgs& a) {
  const aon::Method method = aon::parse_method(a.method);
  if ((method == aon::Method::Fptas) != !a.eps.empty()) {
    throw aon::Error(aon::ErrorCode::ParseError, "--eps is required for fptas and only for fptas");
  }
  const aon::Instance inst = aon::parse_instance(read_file(a.file));
  aon::validate(inst);
  json out = {{"method", a.method}};
  const auto start = std::chrono::steady_clock::now();
  switch (method) {
    case aon::Method::Brute:
      out.update(solution_json(aon::brute_force(inst)));
      break;
    case aon::Method::Dp: {
      const aon::DpTable table = aon::build_dp(inst);
      out.update(solution_json(aon::dp_solve(inst, table)));
      out["table_cells"] = table.cells();
      break;
    }
    case aon::Method::Fptas: {
      const aon::FptasResult r = aon::fptas_solve(inst, aon::Epsilon::parse(a.eps));
      out.update(solution_json(r.solution));
      out["epsilon"] = a.eps;
      out["proxy_value"] = r.proxy_value;
      out["candidates_evaluated"] = r.candidates_evaluated;
      out["table_cells"] = r.table_cells;
      break;
    }
  }
  out["wall_time_us"] = std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  std::cout << out.dump() << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string instance;
  std::size_t trials = 500;
  std::uint64_t seed = 7;
  std::size_t n_min = 1;
  std::size_t n_max = 15;
  std::int64_t cmax = 30;
  std::string pdist = "uniform(0.01,0.99)";
  std::string eps = "0.5,0.1,0.01";
  std::string replay_out;
  bool mutate_dp = false;
};

int cmd_verify(const VerifyArgs& a) {
  aon::Solvers solvers;
  if (a.mutate_dp) {
    // Self-test of the failure path: a DP whose reported value is off.
    solvers.dp = [](const aon::Instance& inst) {
      aon::Solution s = aon::dp_solve(inst);
      s.value *= 1.0 + 1e-6;
      return s;
    };
  }
  const auto eps = eps_list(a.eps);
  aon::VerifyReport report;
  if (!a.instance.empty()) {
    const aon::Instance inst = aon::parse_instance(read_file(a.instance));
    aon::validate(inst);
    if (inst.size() > aon::kMaxEnumerationItems) {
      throw aon::Error(aon::ErrorCode::TooLargeForEnumeration, "verify needs a brute-force optimum");
    }
    aon::verify_instance(inst, eps, solvers, report);
  } else {
    aon::VerifyOptions opt;
    opt.trials = a.trials;
    opt.seed = a.seed;
    opt.n_min = a.n_min;
    opt.n_max = a.n_max;
    opt.cmax = a.cmax;
    opt.pdist = aon::parse_prob_dist(a.pdist);
    opt.eps = eps;
    report = aon::run_verify(opt, solvers);
  }
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"check", c.name}, {"passed", c.passed}, {"failed", c.failed}});
    std::cerr << (c.failed == 0 ? "PASS " : "FAIL ") << c.name << ": " << c.passed << " passed, "
              << c.failed << " failed\n";
  }
  std::cout << json{{"instances", report.instances}, {"ok", report.ok()}, {"checks", checks}}.dump() << "\n";
  if (report.ok()) return kExitOk;
  const std::string replay = aon::write_instance(*report.failure);
  std::cerr << "first violation in check '" << report.failure_check << "' on instance:\n" << replay;
  if (!a.replay_out.empty()) write_output(a.replay_out, replay);
  return kExitProperty;
}

struct SubsetSumArgs {
  std::string weights;
  std::int64_t target = 0;
  std::string out;
};

aon::SubsetSumInstance subset_sum(const SubsetSumArgs& a) {
  aon::SubsetSumInstance ss{int_list(a.weights), a.target};
  aon::validate(ss);
  return ss;
}

int cmd_reduce(const SubsetSumArgs& a) {
  write_output(a.out, aon::write_reduced(aon::reduce(subset_sum(a))));
  return kExitOk;
}

int cmd_decide(const SubsetSumArgs& a) {
  const aon::DecisionReport r = aon::decide(subset_sum(a));
  json out = {{"feasible", r.feasible},        {"optimal_log_value", r.optimal_log_value},
              {"threshold", r.threshold},      {"margin", r.margin},
              {"error_bound", r.error_bound},  {"certified", r.certified},
              {"trivial", r.trivial},          {"K", r.K},
              {"precision_bits", r.precision_bits}, {"support", r.support},
              {"profit_sum", r.profit_sum}};
  std::cout << out.dump() << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::string n;
  std::string cmax = "100";
  std::string eps = "0.1";
  std::string methods = "dp,fptas";
  std::uint64_t seed = 1;
  std::string pdist = "uniform(0.01,0.99)";
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  aon::BenchGrid grid;
  grid.ns = size_grid(a.n);
  grid.cmaxes = int_list(a.cmax);
  grid.eps = eps_list(a.eps);
  grid.methods.clear();
  for (const auto& m : split(a.methods, ',')) grid.methods.push_back(aon::parse_method(m));
  grid.seed = a.seed;
  grid.pdist = aon::parse_prob_dist(a.pdist);
  for (auto m : grid.methods) {
    if (m == aon::Method::Fptas && grid.eps.empty()) {
      throw aon::Error(aon::ErrorCode::ParseError, "fptas needs at least one --eps");
    }
  }
  // Fail on an unwritable path before doing any work.
  if (!a.out.empty() && a.out != "-") write_output(a.out, "");
  const aon::BenchResult res = aon::run_bench(grid);
  write_output(a.out, aon::bench_csv(res.rows));
  std::cerr << res.rows.size() << " rows, " << res.cross_method_violations << " cross-method violations, "
            << res.work_bound_violations << " work-bound violations\n";
  return res.cross_method_violations + res.work_bound_violations == 0 ? kExitOk : kExitProperty;
}

int exit_code_for(aon::ErrorCode code) {
  switch (code) {
    case aon::ErrorCode::TooLargeForEnumeration: return kExitBudget;
    case aon::ErrorCode::PrecisionExhausted: return kExitPrecision;
    default: return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum expected value all-or-nothing subset solvers"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen.n, "Number of items")->required();
  gen_cmd->add_option("--cmax", gen.cmax, "Profits are uniform on [1, cmax]")->required();
  gen_cmd->add_option("--pdist", gen.pdist, "uniform(lo,hi) or mixed(q)");
  gen_cmd->add_option("--seed", gen.seed, "Seed for mt19937_64");
  gen_cmd->add_option("--out", gen.out, "Output path (default: stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("file", solve.file, "Instance file, or - for stdin")->required();
  solve_cmd->add_option("--method", solve.method, "brute, dp or fptas")->required();
  solve_cmd->add_option("--eps", solve.eps, "Approximation parameter in (0,1), fptas only");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the solvers on random or given instances");
  verify_cmd->add_option("--instance", verify.instance, "Check this instance file instead of generating");
  verify_cmd->add_option("--trials", verify.trials);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--n-min", verify.n_min);
  verify_cmd->add_option("--n-max", verify.n_max);
  verify_cmd->add_option("--cmax", verify.cmax);
  verify_cmd->add_option("--pdist", verify.pdist);
  verify_cmd->add_option("--eps", verify.eps, "Comma-separated epsilons");
  verify_cmd->add_option("--replay-out", verify.replay_out, "Write the first failing instance here");
  verify_cmd->add_flag("--mutate-dp", verify.mutate_dp, "Perturb DP values to exercise the failure path");

  SubsetSumArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Map a subset-sum instance to an all-or-nothing instance");
  reduce_cmd->add_option("--weights", reduce.weights, "Comma-separated positive integers")->required();
  reduce_cmd->add_option("--target", reduce.target, "Target sum M")->required();
  reduce_cmd->add_option("--out", reduce.out, "Output path (default: stdout)");

  SubsetSumArgs decide;
  auto* decide_cmd = app.add_subcommand("decide", "Decide subset sum through the reduction");
  decide_cmd->add_option("--weights", decide.weights, "Comma-separated positive integers")->required();
  decide_cmd->add_option("--target", decide.target, "Target sum M")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark grid and write CSV");
  bench_cmd->add_option("--n", bench.n, "Sizes: a,b,c or lo:hi:step")->required();
  bench_cmd->add_option("--cmax", bench.cmax, "Comma-separated profit bounds");
  bench_cmd->add_option("--eps", bench.eps, "Comma-separated epsilons for fptas");
  bench_cmd->add_option("--methods", bench.methods, "Comma-separated: brute,dp,fptas");
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--pdist", bench.pdist);
  bench_cmd->add_option("--out", bench.out, "CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*solve_cmd) return cmd_solve(solve);
    if (*verify_cmd) return cmd_verify(verify);
    if (*reduce_cmd) return cmd_reduce(reduce);
    if (*decide_cmd) return cmd_decide(decide);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const aon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
