// Copyright 2026 The ceoleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// End-to-end tests of the command-line tool: each case spawns the real
// binary and inspects exit codes and artifacts.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int invocation = 0;
  const std::string tag = std::to_string(getpid()) + "_" + std::to_string(invocation++);
  const std::string dir = ::testing::TempDir();
  const std::string out_path = dir + "/cli_stdout_" + tag + ".txt";
  const std::string err_path = dir + "/cli_stderr_" + tag + ".txt";
  const std::string cmd = std::string(CEOLEAK_CLI_PATH) + " " + args + " > " + out_path +
                          " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = slurp(out_path);
  res.err = slurp(err_path);
  return res;
}

std::string write_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kBadAuxDoc = R"({
  "schema": 1,
  "px": [0.5, 0.5],
  "py1_given_x": [[0.9, 0.1], [0.1, 0.9]],
  "py2_given_x": [[0.9, 0.1], [0.1, 0.9]],
  "pu1_given_y1_q": [[[0.6, 0.3], [0.1, 0.9]]]
})";

TEST(Cli, VerifySelectedChecksPass) {
  const RunResult res = run_cli("verify --seed 7 --checks xi,dominance --instances 20");
  EXPECT_EQ(res.exit_code, 0) << res.out << res.err;
  EXPECT_NE(res.out.find("[PASS] xi"), std::string::npos) << res.out;
  EXPECT_NE(res.out.find("[PASS] dominance"), std::string::npos) << res.out;
  EXPECT_EQ(res.out.find("saturation"), std::string::npos) << res.out;
}

TEST(Cli, VerifyDefaultRunsEveryCheckAndPasses) {
  const RunResult res = run_cli("verify --instances 25");
  EXPECT_EQ(res.exit_code, 0) << res.out << res.err;
  for (const char* name : {"xi", "inner-outer", "dominance", "saturation"}) {
    EXPECT_NE(res.out.find(std::string("[PASS] ") + name), std::string::npos) << res.out;
  }
  EXPECT_NE(res.out.find("verify: PASS (seed 42)"), std::string::npos) << res.out;
}

TEST(Cli, VerifyChecksFilterRunsOnlySaturation) {
  const RunResult res = run_cli("verify --checks saturation --sigma-x2 2");
  EXPECT_EQ(res.exit_code, 0) << res.out << res.err;
  EXPECT_NE(res.out.find("saturation"), std::string::npos);
  EXPECT_EQ(res.out.find("dominance"), std::string::npos);
  EXPECT_EQ(res.out.find("xi:"), std::string::npos);
}

TEST(Cli, CorruptedKernelRowIsReportedWithExitTwo) {
  const std::string path = write_file("bad_aux.json", kBadAuxDoc);
  const RunResult res = run_cli("discrete-eval --model " + path);
  EXPECT_EQ(res.exit_code, 2) << res.out << res.err;
  EXPECT_NE(res.err.find("row 0"), std::string::npos) << res.err;
  EXPECT_NE(res.err.find("pu1_given_y1_q"), std::string::npos) << res.err;
}

TEST(Cli, MalformedJsonIsReportedWithExitTwo) {
  const std::string path = write_file("broken.json", "{ \"schema\": 1, ");
  const RunResult res = run_cli("discrete-eval --model " + path);
  EXPECT_EQ(res.exit_code, 2);
  EXPECT_NE(res.err.find(path), std::string::npos) << res.err;
}

TEST(Cli, GaussianCurveIsByteIdenticalAcrossRuns) {
  const std::string dir = ::testing::TempDir();
  const std::string a = dir + "/curve_a.csv";
  const std::string b = dir + "/curve_b.csv";
  const std::string flags =
      " --sigma-x2 2 --sigma-n1 1 --sigma-n2 1 --r1 0.5 --r2 0.5 --metric quadratic"
      " --l1-grid 0:0.6:0.1 --grid-points 51";
  ASSERT_EQ(run_cli("gaussian-curve" + flags + " --out " + a).exit_code, 0);
  ASSERT_EQ(run_cli("gaussian-curve" + flags + " --out " + b).exit_code, 0);
  const std::string contents = slurp(a);
  EXPECT_EQ(contents, slurp(b));
  EXPECT_EQ(contents.rfind("L1,minD,r1_witness,r2_witness\n", 0), 0u) << contents;
  EXPECT_EQ(std::count(contents.begin(), contents.end(), '\n'), 8);  // header + 7 rows
}

TEST(Cli, ExtremePointsEmitsCsvAndVerdict) {
  const std::string model = std::string(CEOLEAK_DATA_DIR) + "/bsc_identity_u.json";
  const std::string csv = ::testing::TempDir() + "/points.csv";
  const RunResult res = run_cli("extreme-points --model " + model + " --out " + csv);
  EXPECT_EQ(res.exit_code, 0) << res.err;
  EXPECT_NE(res.out.find("inner dominates outer extreme points"), std::string::npos);
  const std::string contents = slurp(csv);
  EXPECT_EQ(contents.rfind("label,R1,R2,L1,L2,D\n", 0), 0u);
  EXPECT_EQ(std::count(contents.begin(), contents.end(), '\n'), 11);  // header + P1..P10
}

TEST(Cli, CounterexampleReportsTheStrictGap) {
  const std::string model = std::string(CEOLEAK_DATA_DIR) + "/bsc_identity_u.json";
  const RunResult res = run_cli("counterexample --model " + model);
  EXPECT_EQ(res.exit_code, 0) << res.err;
  EXPECT_NE(res.out.find("\"verdict\": \"strict\""), std::string::npos) << res.out;
  EXPECT_NE(res.out.find("0.4689955935"), std::string::npos) << res.out;
}

TEST(Cli, DiscreteEvalTableFormatRendersInequalities) {
  const std::string model = std::string(CEOLEAK_DATA_DIR) + "/bsc_identity_u.json";
  const RunResult res = run_cli("discrete-eval --model " + model + " --format table");
  EXPECT_EQ(res.exit_code, 0) << res.err;
  EXPECT_NE(res.out.find("information quantities"), std::string::npos);
  EXPECT_NE(res.out.find(">= "), std::string::npos);
  EXPECT_NE(res.out.find("R1 + R2"), std::string::npos);
}

TEST(Cli, DiscreteEvalEmitsBothBoundFamilies) {
  const std::string model = std::string(CEOLEAK_DATA_DIR) + "/si_binary_example.json";
  const RunResult res = run_cli("discrete-eval --model " + model);
  EXPECT_EQ(res.exit_code, 0) << res.err;
  EXPECT_NE(res.out.find("inner_general"), std::string::npos);
  EXPECT_NE(res.out.find("logloss_outer_si"), std::string::npos);
  EXPECT_NE(res.out.find("xi_prime"), std::string::npos);
}

TEST(Cli, GaussianMemberAcceptsInfiniteLeakage) {
  const RunResult res = run_cli(
      "gaussian-member --sigma-x2 2 --r1 0.5 --r2 0.5 --l1 0.2 --l2 inf --d 2.2 "
      "--metric logloss");
  EXPECT_EQ(res.exit_code, 0) << res.err;
  EXPECT_NE(res.out.find("\"member\""), std::string::npos);
}

TEST(Cli, UnknownCheckNameFailsWithExitTwo) {
  const RunResult res = run_cli("verify --checks nonsense");
  EXPECT_EQ(res.exit_code, 2);
  EXPECT_NE(res.err.find("nonsense"), std::string::npos);
}

}  // namespace
