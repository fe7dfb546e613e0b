#include <aon/io.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(AON_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("aon_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, GenIsReproducible) {
  const CliRun a = run("gen --n 5 --cmax 10 --seed 42");
  const CliRun b = run("gen --n 5 --cmax 10 --seed 42");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(aon::parse_instance(a.out).size(), 5u);
}

TEST(Cli, SolveMethods) {
  const std::string f = temp_file("small.json", R"({"items": [{"profit": 1, "prob": 0.9}, {"profit": 2, "prob": 0.5}]})");
  const CliRun dp = run("solve " + f + " --method dp");
  ASSERT_EQ(dp.exit_code, 0);
  const auto j = aon::json::parse(dp.out);
  EXPECT_EQ(j["support"], aon::json::parse("[0,1]"));
  EXPECT_NEAR(j["value"].get<double>(), 1.35, 1e-12);

  const CliRun fp = run("solve " + f + " --method fptas --eps 0.1");
  ASSERT_EQ(fp.exit_code, 0);
  EXPECT_GE(aon::json::parse(fp.out)["value"].get<double>(), 1.215);

  EXPECT_EQ(run("solve " + f + " --method fptas").exit_code, 2);
  EXPECT_EQ(run("solve " + f + " --method dp --eps 0.1").exit_code, 2);
  EXPECT_EQ(run("solve " + f + " --method fptas --eps 1.5").exit_code, 2);
}

TEST(Cli, ExitCodes) {
  const CliRun big = run("gen --n 30 --cmax 10 --seed 1");
  ASSERT_EQ(big.exit_code, 0);
  EXPECT_EQ(run("solve " + temp_file("big.json", big.out) + " --method brute").exit_code, 3);
  EXPECT_EQ(run("solve " + temp_file("bad.json", "{\"items\": [") + " --method dp").exit_code, 2);
  EXPECT_EQ(run("solve /nonexistent/file.json --method dp").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST(Cli, VerifyPassesAndDetectsMutation) {
  const CliRun ok = run("verify --trials 30 --seed 3");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_TRUE(aon::json::parse(ok.out)["ok"].get<bool>());

  const std::string replay = (std::filesystem::temp_directory_path() / "aon_cli_test_replay.json").string();
  std::filesystem::remove(replay);
  const CliRun bad = run("verify --trials 30 --seed 3 --mutate-dp --replay-out " + replay);
  EXPECT_EQ(bad.exit_code, 4);
  std::ifstream in(replay);
  ASSERT_TRUE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_GE(aon::parse_instance(text).size(), 1u);
}

TEST(Cli, DecideAndReduce) {
  const CliRun yes = run("decide --weights 1,2,3 --target 4");
  ASSERT_EQ(yes.exit_code, 0);
  EXPECT_TRUE(aon::json::parse(yes.out)["feasible"].get<bool>());
  const CliRun no = run("decide --weights 3,3 --target 4");
  ASSERT_EQ(no.exit_code, 0);
  EXPECT_FALSE(aon::json::parse(no.out)["feasible"].get<bool>());

  const CliRun red = run("reduce --weights 1,2,3 --target 4");
  ASSERT_EQ(red.exit_code, 0);
  const auto j = aon::json::parse(red.out);
  EXPECT_EQ(j["K"].get<std::uint64_t>(), 288u);
  for (const auto& it : j["items"]) EXPECT_EQ(it["prob"]["den"].get<std::uint64_t>(), 288u);
  EXPECT_EQ(run("reduce --weights 1,x --target 4").exit_code, 2);
  EXPECT_EQ(run("decide --weights 1 --target 0").exit_code, 2);
}

TEST(Cli, Bench) {
  const CliRun ok = run("bench --n 5,10 --methods dp,fptas --eps 0.5");
  ASSERT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.out.rfind("method,n,cmax,epsilon,seed,value,profit_sum,wall_time_us,table_cells\n", 0), 0u);
  std::size_t lines = 0;
  for (char c : ok.out) lines += c == '\n';
  EXPECT_EQ(lines, 5u);
  EXPECT_EQ(run("bench --n 5 --out /nonexistent/dir/out.csv").exit_code, 2);
}

}  // namespace
