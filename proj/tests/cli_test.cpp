#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(BPIR_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args) {
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.out;
  return nlohmann::json::parse(r.out);
}

TEST(Cli, Params) {
  const auto j = run_json("params --k 4 --t 1 --b 1 --r 4");
  EXPECT_EQ(j["q"], 7);
  EXPECT_EQ(j["delta"], 1);
  EXPECT_EQ(j["s"], 1);
  const auto e = run_json("params --k 7 --t 1 --b 1 --r 5");
  EXPECT_EQ(e["delta"], 2);
  EXPECT_EQ(e["s"], 2);
}

TEST(Cli, InvalidParametersExit2) {
  const auto r = run("params --k 4 --t 1 --b 1 --r 5");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("error: invalid-parameters: Δ ∤ (k−2b−t) violated"), std::string::npos) << r.out;
}

TEST(Cli, RunHonestAndByzantine) {
  auto j = run_json("run --k 4 --t 1 --b 1 --r 4 --random-db --iota 2 --seed 5");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["measured_rate"], "1/4");
  EXPECT_EQ(j["ground_truth_match"], true);
  j = run_json("run --k 4 --t 1 --b 1 --r 4 --random-db --iota 1 --byzantine 2 --seed 5");
  EXPECT_EQ(j["identified_error_positions"], nlohmann::json::array({2}));
  j = run_json("run --k 7 --t 1 --b 1 --r 5 --random-db --iota 1 --byzantine 5 --strategy query-aware");
  EXPECT_EQ(j["identified_error_positions"], nlohmann::json::array({5}));
}

TEST(Cli, BudgetExceededExit3) {
  const auto r = run("run --k 4 --t 1 --b 1 --r 4 --random-db --iota 1 --byzantine 1,2");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("error: byzantine-budget-exceeded"), std::string::npos) << r.out;
}

TEST(Cli, Deterministic) {
  const std::string args = "run --k 7 --t 1 --b 1 --r 5 --random-db --iota 2 --byzantine 3 --seed 11";
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, DatabaseFile) {
  const std::string path = testing::TempDir() + "bpir_cli_db.txt";
  std::ofstream(path) << "3\n5\n";
  auto j = run_json("run --k 4 --t 1 --b 1 --r 4 --db " + path + " --iota 2");
  EXPECT_EQ(j["retrieved_file"], nlohmann::json::array({"5"}));
  std::ofstream(path) << "0:1,2:3\n4:5,6:0\n";
  j = run_json("run --k 7 --t 1 --b 1 --r 5 --db " + path + " --iota 2 --byzantine 4");
  EXPECT_EQ(j["retrieved_file"], nlohmann::json::array({"4:5", "6:0"}));
  std::ofstream(path) << "1\n2\nx\n";
  const auto bad = run("run --k 4 --t 1 --b 1 --r 4 --db " + path + " --iota 1");
  EXPECT_EQ(bad.code, 4);
  EXPECT_NE(bad.out.find("line 3"), std::string::npos) << bad.out;
  EXPECT_EQ(run("run --k 4 --t 1 --b 1 --r 4 --db /nonexistent/db.txt --iota 1").code, 4);
}

TEST(Cli, UsageErrorsExit1) {
  EXPECT_EQ(run("run --k 4 --t 1 --b 1 --r 4 --iota 1").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("run --k 4 --t 1 --b 1 --r 4 --random-db --iota 1 --seed nope").code, 1);
}

TEST(Cli, IotaOutOfRange) {
  EXPECT_EQ(run("run --k 4 --t 1 --b 1 --r 4 --random-db --m 2 --iota 3").code, 2);
}

TEST(Cli, Sweep) {
  auto j = run_json("sweep --k 4 --t 1 --b 1 --r 4 --m 3 --random-db --exhaustive");
  EXPECT_EQ(j["cases_total"], 72);
  EXPECT_EQ(j["cases_failed"], 0);
  EXPECT_EQ(run("sweep --k 4 --t 1 --b 1 --r 4 --m 3 --random-db --exhaustive --byzantine-count 2").code, 3);
  EXPECT_EQ(run("sweep --k 13 --t 1 --b 2 --r 6 --m 100 --random-db --exhaustive").code, 5);
}

TEST(Cli, Audit) {
  auto j = run_json("audit --k 4 --t 1 --b 1 --r 4 --m 2 --exhaustive");
  EXPECT_EQ(j["max_tv_distance"], "0");
  j = run_json("audit --k 4 --t 1 --b 1 --r 4 --m 2 --exhaustive --subset 1,2");
  EXPECT_EQ(j["verdict"], "beyond threshold, privacy not claimed");
  j = run_json("audit --k 7 --t 1 --b 1 --r 5 --transfer-matrix");
  EXPECT_EQ(j["cases_total"], 7);
  EXPECT_EQ(j["cases_failed"], 0);
  EXPECT_EQ(run("audit --k 7 --t 2 --b 0 --r 3 --exhaustive").code, 5);
}

TEST(Cli, Table) {
  const auto r = run("table --k 7 --t 1 --b 1 --r 5 --l 2 --out csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("File size,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("8*log2(7)"), std::string::npos) << r.out;
  const auto text = run("table --k 4 --t 1 --b 1 --r 4 --l 1");
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("Byzantine-resistance"), std::string::npos);
}

TEST(Cli, TextOutput) {
  const auto r = run("params --k 4 --t 1 --b 1 --r 4 --out text");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("q: 7"), std::string::npos) << r.out;
}

TEST(Cli, Selftest) { EXPECT_EQ(run("selftest").code, 0); }

}  // namespace
