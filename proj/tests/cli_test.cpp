// Copyright 2026 The Webskill Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <array>
#include <cstdio>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/runs.hpp"

namespace webskill {
namespace {

struct Result {
  int code;
  std::string out;
};

Result cli(const std::string& args) {
  std::string cmd = std::string(WEBSKILL_CLI) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& rel) { return testing::data_path(rel); }

std::string run_args(const std::string& mode, const std::string& verify, const std::string& replay,
                     const std::string& out) {
  return "run --site " + data("sites/mini_shop.json") + " --tasks " + data("tasks/mini_shop.json") + " --mode " +
         mode + " --verify " + verify + " --backend scripted:" + data("replays/" + replay + ".jsonl") + " --out " + out;
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    asi_ = testing::fresh_dir("cli_asi").string();
    vanilla_ = testing::fresh_dir("cli_vanilla").string();
    ASSERT_EQ(cli(run_args("asi", "on", "shop_asi", asi_)).code, 0);
    ASSERT_EQ(cli(run_args("vanilla", "off", "shop_vanilla", vanilla_)).code, 0);
  }
  static std::string asi_, vanilla_;
};

std::string Cli::asi_, Cli::vanilla_;

TEST_F(Cli, RunPrintsSummary) {
  auto r = cli(run_args("asi", "on", "shop_asi", testing::fresh_dir("cli_again").string()));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "tasks 8  SR 1.000000  mean steps 3.500000  induced 4/8  reuse 5  library 4\n");
}

TEST_F(Cli, RunRejectsInvalidConfig) {
  auto r = cli(run_args("asi", "off", "shop_asi", testing::fresh_dir("cli_bad").string()));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("error:"), std::string::npos);
  EXPECT_NE(cli("run --site x").code, 0);
}

TEST_F(Cli, RunWithShortReplayIsInfraError) {
  auto r = cli(run_args("asi", "on", "shop_vanilla", testing::fresh_dir("cli_short").string()));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("run aborted"), std::string::npos);
}

std::string verify_args(const std::string& gate_case) {
  std::string dir = data("fixtures/gate/" + gate_case);
  return "verify --candidate " + dir + "/candidate.json --site " + data("sites/mini_shop.json") + " --tasks " +
         data("tasks/mini_shop.json") + " --backend scripted:" + dir + "/replay.jsonl --library " +
         data("fixtures/gate/library.jsonl");
}

TEST_F(Cli, VerifyExitCodes) {
  EXPECT_EQ(cli(verify_args("TTT")).code, 0);
  for (const char* c : {"TTF", "TFT", "TFF", "FTT", "FTF", "FFT", "FFF"}) EXPECT_EQ(cli(verify_args(c)).code, 1) << c;
  EXPECT_EQ(cli("verify --candidate /no/such/file.json --site " + data("sites/mini_shop.json") + " --tasks " +
                data("tasks/mini_shop.json") + " --backend scripted:/dev/null")
                .code,
            2);
}

TEST_F(Cli, StatsTtestCompare) {
  auto s = cli("stats " + asi_);
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("attempted 8  successful 4  reuse 5  total 8"), std::string::npos) << s.out;

  auto t = cli("ttest --a " + asi_ + " --b " + vanilla_ + " --metric steps");
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out.rfind("t ", 0), 0u) << t.out;
  auto sr = cli("ttest --a " + asi_ + " --b " + vanilla_ + " --metric sr");
  EXPECT_EQ(sr.code, 1);
  EXPECT_NE(sr.out.find("not applicable"), std::string::npos);

  auto out = testing::fresh_dir("cli_compare");
  auto c = cli("compare " + asi_ + " " + vanilla_ + " --out " + out.string());
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(testing::read_file(out / "comparison.md"), c.out);
  EXPECT_TRUE(std::filesystem::exists(out / "comparison.json"));
}

}  // namespace
}  // namespace webskill
