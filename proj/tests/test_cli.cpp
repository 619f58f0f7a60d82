// Copyright 2026 The abelspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the command-line binary: determinism, goldens, exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int exit_code = -1;
  std::string out;
};

Outcome RunCli(const std::string& args) {
  const std::string cmd = std::string("\"") + ABELSPEC_CLI + "\" " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return o;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = pclose(pipe);
  o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

json StripTiming(const std::string& text) {
  json j = json::parse(text);
  j.erase("timing");
  return j;
}

std::vector<fs::path> ShippedProblems() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(ABELSPEC_PROBLEMS_DIR))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Structural equality; numbers within abs 1e-9 or rel 1e-9.
void ExpectClose(const json& got, const json& want, const std::string& path) {
  if (want.is_number() && got.is_number()) {
    const double a = got.get<double>(), b = want.get<double>();
    EXPECT_LE(std::abs(a - b), 1e-9 + 1e-9 * std::abs(b)) << path;
    return;
  }
  ASSERT_EQ(got.type(), want.type()) << path;
  if (want.is_object()) {
    ASSERT_EQ(got.size(), want.size()) << path;
    for (auto it = want.begin(); it != want.end(); ++it) {
      ASSERT_TRUE(got.contains(it.key())) << path << "." << it.key();
      ExpectClose(got.at(it.key()), it.value(), path + "." + it.key());
    }
  } else if (want.is_array()) {
    ASSERT_EQ(got.size(), want.size()) << path;
    for (size_t i = 0; i < want.size(); ++i)
      ExpectClose(got.at(i), want.at(i), path + "[" + std::to_string(i) + "]");
  } else {
    EXPECT_EQ(got, want) << path;
  }
}

TEST(Cli, ShippedProblemsAreByteStable) {
  const auto files = ShippedProblems();
  ASSERT_GE(files.size(), 10u);
  for (const auto& f : files) {
    const auto a = RunCli("\"" + f.string() + "\" --oracle");
    const auto b = RunCli("\"" + f.string() + "\" --oracle");
    ASSERT_EQ(a.exit_code, 0) << f;
    ASSERT_EQ(b.exit_code, 0) << f;
    // Timing is the final top-level object; every byte before it must agree.
    const auto cut = a.out.rfind("\"timing\"");
    ASSERT_NE(cut, std::string::npos) << f;
    EXPECT_EQ(a.out.substr(0, cut), b.out.substr(0, b.out.rfind("\"timing\""))) << f;
  }
}

TEST(Cli, ShippedProblemsMatchGoldens) {
  for (const auto& f : ShippedProblems()) {
    const fs::path golden = fs::path(ABELSPEC_PROBLEMS_DIR) / "golden" / f.filename();
    ASSERT_TRUE(fs::exists(golden)) << golden;
    std::ifstream in(golden);
    const json want = json::parse(in);
    const auto run = RunCli("\"" + f.string() + "\" --oracle");
    ASSERT_EQ(run.exit_code, 0) << f;
    SCOPED_TRACE(f.filename().string());
    ExpectClose(StripTiming(run.out), want, "$");
  }
}

TEST(Cli, CorruptedOracleFixtureExitsThree) {
  const auto run = RunCli(std::string("\"") + ABELSPEC_FIXTURES_DIR + "/z40_corrupted.json\"");
  EXPECT_EQ(run.exit_code, 3);
  const json j = json::parse(run.out);
  EXPECT_EQ(j.at("status"), "oracle_violation");
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(RunCli("/nonexistent/problem.json").exit_code, 1);
  EXPECT_EQ(RunCli("").exit_code, 1);
}

TEST(Cli, FlagsReachTheReport) {
  const std::string z40 = std::string("\"") + ABELSPEC_PROBLEMS_DIR + "/z40.json\"";
  const auto run = RunCli(z40 + " --oracle --m 7 4 --tol 1e-8");
  ASSERT_EQ(run.exit_code, 0);
  const json j = json::parse(run.out);
  EXPECT_DOUBLE_EQ(j.at("provenance").at("support_tolerance").get<double>(), 1e-8);
  EXPECT_NEAR(j.at("results").at("best").at("multi").at("bound").get<double>(), 4.2147, 1e-3);
}

TEST(Cli, OutFlagWritesFile) {
  const fs::path out = fs::temp_directory_path() / "abelspec_cli_out.json";
  fs::remove(out);
  const auto run = RunCli(std::string("\"") + ABELSPEC_PROBLEMS_DIR + "/z4_fourier.json\" --out \"" +
                          out.string() + "\"");
  ASSERT_EQ(run.exit_code, 0);
  ASSERT_TRUE(fs::exists(out));
  std::ifstream in(out);
  EXPECT_EQ(json::parse(in).at("task"), "fourier");
  fs::remove(out);
}

TEST(Cli, VersionFlag) {
  const auto run = RunCli("--version");
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("1.0.0"), std::string::npos);
}

}  // namespace
