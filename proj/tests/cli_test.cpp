// Copyright 2026 The gssf Authors.
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


// Runs the gssf-verify binary and checks the exit-code contract and output
// determinism.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#ifndef GSSF_VERIFY_PATH
#error "GSSF_VERIFY_PATH must name the gssf-verify executable"
#endif

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result invoke(const std::string& args) {
  const std::string command = std::string(GSSF_VERIFY_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string without_duration(const std::string& json) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(json);
  j.erase("duration_ms");
  return j.dump(2);
}

TEST(CliTest, HelpExitsZero) {
  const Result r = invoke("--help");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("--suite"), std::string::npos);
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke("--bogus").status, 2);
  EXPECT_EQ(invoke("--suite nothing").status, 2);
  EXPECT_EQ(invoke("--n 1").status, 2);
  EXPECT_EQ(invoke("--n 2 --m 4").status, 2);
  EXPECT_EQ(invoke("--trials 0").status, 2);
  EXPECT_EQ(invoke("--tol -1").status, 2);
  EXPECT_EQ(invoke("--f1 1").status, 2);
  EXPECT_EQ(invoke("--f1 1 --f2 0 --f3 0 --sasakian-c 1").status, 2);
  EXPECT_EQ(invoke("--random-params 1 -1").status, 2);
  EXPECT_EQ(invoke("--format yaml").status, 2);
  EXPECT_EQ(invoke("--connection tanaka").status, 2);
  EXPECT_EQ(invoke("--ricci-convention middle").status, 2);
  EXPECT_EQ(invoke("--threads 0").status, 2);
}

TEST(CliTest, FailedCheckExitsOne) {
  EXPECT_EQ(invoke("--suite curvature --connection tanaka_webster --tol 1e-300").status, 1);
}

TEST(CliTest, PassingRunExitsZero) {
  const Result r = invoke("--suite structure --n 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("OK: "), std::string::npos);
}

TEST(CliTest, ErrataDoNotChangeExitCode) {
  const Result r = invoke("--suite errata --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["errata"].empty());
}

TEST(CliTest, ParameterModesAreEchoed) {
  const auto params = [](const std::string& args) {
    return nlohmann::json::parse(invoke("--suite structure --format json " + args).out)["config"]
        ["params"];
  };
  EXPECT_EQ(params("--f1 1 --f2 0.5 --f3 -0.5")["mode"], "fixed");
  EXPECT_EQ(params("--f1 1 --f2 0.5 --f3 -0.5")["f2"], 0.5);
  EXPECT_EQ(params("--sasakian-c 2")["c"], 2.0);
  EXPECT_EQ(params("--random-params -1 3")["hi"], 3.0);
  EXPECT_EQ(params("")["mode"], "random");
}

TEST(CliTest, JsonIsDeterministicAcrossRunsAndThreads) {
  const std::string args = "--suite all --n 3 --m 4 --trials 20 --seed 9 --format json";
  const Result a = invoke(args);
  const Result b = invoke(args);
  const Result c = invoke(args + " --threads 3");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(without_duration(a.out), without_duration(b.out));
  EXPECT_EQ(without_duration(a.out), without_duration(c.out));
}

TEST(CliTest, OutWritesFile) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "gssf_cli_test_report.json";
  std::filesystem::remove(path);
  const Result r = invoke("--suite structure --format json --out " + path.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(content.str())["config"]["suite"], "structure");
  std::filesystem::remove(path);
}

}  // namespace
