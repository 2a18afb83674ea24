// Copyright 2026 The Tabhash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "tabhash/table_file.hpp"
#include "tabhash/tabulation.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " TABHASH_CLI " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tabhash_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_F(CliTest, ZeroTablesHashToZero) {
  const tabhash::TabulationParams p{2, 8, 16};
  tabhash::save_tables(path("zero.tabh"),
                       tabhash::TabulationScheme::from_tables(p, std::vector<std::uint64_t>(512, 0)));
  for (const char* key : {"0", "ffff", "1234"}) {
    const Result r = cli("hash --tables " + path("zero.tabh") + " --key " + key);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0x0\n");
  }
}

TEST_F(CliTest, TableFileKey0102) {
  const tabhash::TabulationParams p{2, 8, 16};
  std::vector<std::uint64_t> t(512, 0);
  t[0x02] = 0xA5A5;  // table 0, low character
  t[256 + 0x01] = 0;
  tabhash::save_tables(path("t.tabh"), tabhash::TabulationScheme::from_tables(p, t));
  const Result r = cli("hash --tables " + path("t.tabh") + " --key 0x0102");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0xa5a5\n");
}

TEST_F(CliTest, GoldenTablesMatchLibrary) {
  const std::string golden = TABHASH_TEST_DATA "/tables_c4_char8_out32_seed42.tabh";
  const auto tab = tabhash::load_tables(golden);
  char want[32];
  std::snprintf(want, sizeof want, "0x%llx\n", static_cast<unsigned long long>(tab(0x0102)));
  EXPECT_EQ(cli("hash --tables " + golden + " --key 0102").out, want);
  EXPECT_EQ(cli("hash --scheme tab-c4 --seed 0x42 --key 0102").out, want);
  ASSERT_EQ(cli("golden tables --out " + path("g.tabh")).code, 0);
  EXPECT_EQ(slurp(path("g.tabh")), slurp(golden));
}

TEST_F(CliTest, GoldenPrngMatchesFile) {
  ASSERT_EQ(cli("golden prng --out " + path("p.tprg")).code, 0);
  EXPECT_EQ(slurp(path("p.tprg")), slurp(TABHASH_TEST_DATA "/prng_seed1234_R4_deg2.tprg"));
}

TEST_F(CliTest, MalformedInputIsUsageError) {
  EXPECT_EQ(cli("hash --key 0xzz").code, 2);
  EXPECT_EQ(cli("hash --key 123456789").code, 2);  // wider than 32 bits
  EXPECT_EQ(cli("hash").code, 2);
  EXPECT_EQ(cli("run --exp nope").code, 2);
  EXPECT_EQ(cli("run --exp bins --scheme tab-c3").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
}

TEST_F(CliTest, RunWritesReport) {
  const Result r = cli("run --exp minwise --scheme tab-c2 --n 1024 --trials 200 --seed 7 --out " +
                       path("r.json") + " --csv " + path("h.csv"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("minwise ", 0), 0u);
  const auto j = nlohmann::json::parse(slurp(path("r.json")));
  for (const char* key : {"experiment", "scheme", "spec", "seed", "trials", "stats"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["stats"].contains("p_times_n"));
}

TEST_F(CliTest, FailedBuildIsStillSuccess) {
  const Result r = cli("run --exp cuckoo --n 3 --m 1 --trials 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("success = 0"), std::string::npos) << r.out;
}

TEST_F(CliTest, SeedEnvironmentOverride) {
  const std::string base = "run --exp bins --n 256 --m 16 --trials 5 --out ";
  ASSERT_EQ(cli(base + path("a.json") + " --seed 3", "TABHASH_SEED=99").code, 0);
  ASSERT_EQ(cli(base + path("b.json") + " --seed 99").code, 0);
  const auto a = nlohmann::json::parse(slurp(path("a.json")));
  const auto b = nlohmann::json::parse(slurp(path("b.json")));
  EXPECT_EQ(a["seed"], 99);
  EXPECT_EQ(a["stats"], b["stats"]);
}

TEST_F(CliTest, StoredConfigReplays) {
  ASSERT_EQ(cli("run --exp linear-probing --n 512 --trials 3 --save-config " + path("c.json") +
                " --out " + path("a.json"))
                .code,
            0);
  ASSERT_EQ(cli("run --config " + path("c.json") + " --out " + path("b.json")).code, 0);
  const auto a = nlohmann::json::parse(slurp(path("a.json")));
  const auto b = nlohmann::json::parse(slurp(path("b.json")));
  EXPECT_EQ(a["stats"], b["stats"]);
}

TEST_F(CliTest, HelpListsFlags) {
  const Result r = cli("run --help");
  EXPECT_EQ(r.code, 0);
  for (const char* flag : {"--exp", "--scheme", "--spec", "--n", "--m", "--trials", "--seed",
                           "--threads", "--out", "--csv", "TABHASH_SEED"}) {
    EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
  }
}

}  // namespace
