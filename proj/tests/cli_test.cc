// Copyright 2026 The stripvis Authors
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


#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#ifndef STRIPVIS_CLI_PATH
#error "STRIPVIS_CLI_PATH must name the stripvis executable"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("stripvis_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  fs::path Path(const std::string& name) const { return dir_ / name; }

  RunResult Run(const std::string& args) {
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd =
        std::string(STRIPVIS_CLI_PATH) + " " + args + " 2>" + err.string();
    RunResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = ReadFile(err);
    return r;
  }

  static double MinGapOf(const std::string& out) {
    std::smatch m;
    const std::regex re(R"(min_gap (\S+))");
    if (!std::regex_search(out, m, re)) return -1e300;
    return std::stod(m[1]);
  }

  fs::path dir_;
};

const char kUniformFive[] = "id,y\na,0.5\nb,0.75\nc,1.0\nd,1.25\ne,1.5\n";

TEST_F(CliTest, StaircaseOptimizeThenEval) {
  const fs::path csv = Write("u5.csv", kUniformFive);
  const fs::path out = Path("layout.json");
  const RunResult opt = Run("optimize --input " + csv.string() +
                            " --width 2 --height 2 --method staircase --output " +
                            out.string());
  ASSERT_EQ(opt.exit_code, 0) << opt.err;
  const RunResult ev = Run("eval --layout " + out.string());
  ASSERT_EQ(ev.exit_code, 0) << ev.err;
  EXPECT_GE(MinGapOf(ev.out), 0.5 - 1e-6);
  EXPECT_EQ(MinGapOf(ev.out), MinGapOf(opt.out));
  EXPECT_NE(ev.out.find("\ne 4\n"), std::string::npos) << ev.out;
}

TEST_F(CliTest, ZigzagOnNonUniformInputIsDomainError) {
  const fs::path csv = Write("nu.csv", "0.5\n0.7\n1.5\n");
  const RunResult r = Run("optimize --input " + csv.string() +
                          " --width 2 --height auto --method zigzag --output " +
                          Path("z.json").string());
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("uniform"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(Path("z.json")));
}

TEST_F(CliTest, InputErrorsExitTwo) {
  const fs::path bad = Write("bad.csv", "a,0.5\nb,1.0\nc,abc\n");
  const RunResult r = Run("optimize --input " + bad.string() +
                          " --width 2 --method squeeze --output " + Path("o.json").string());
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

  const fs::path csv = Write("u5.csv", kUniformFive);
  EXPECT_EQ(Run("optimize --input " + csv.string() + " --width 3 --method squeeze --output " +
                Path("o.json").string())
                .exit_code,
            2);
  EXPECT_EQ(Run("optimize --input " + csv.string() +
                " --width 2 --height tall --method squeeze --output " +
                Path("o.json").string())
                .exit_code,
            2);
  EXPECT_EQ(Run("optimize --input " + csv.string() + " --width 2 --method magic --output " +
                Path("o.json").string())
                .exit_code,
            2);
  EXPECT_EQ(Run("eval --layout " + Path("missing.json").string()).exit_code, 2);
  EXPECT_EQ(Run("frobnicate").exit_code, 2);
  EXPECT_EQ(Run("--help").exit_code, 0);
}

TEST_F(CliTest, StaircaseInTallStripIsDomainError) {
  const fs::path csv = Write("tall.csv", "0.5\n1.5\n2.5\n");
  const RunResult r = Run("optimize --input " + csv.string() +
                          " --width 2 --method staircase --output " + Path("o.json").string());
  EXPECT_EQ(r.exit_code, 3) << r.err;
}

TEST_F(CliTest, JitterIsByteIdenticalForSameSeed) {
  const fs::path csv = Write("u5.csv", kUniformFive);
  for (const char* name : {"a.json", "b.json"}) {
    ASSERT_EQ(Run("optimize --input " + csv.string() +
                  " --width 1.5 --method jitter --seed 42 --output " + Path(name).string())
                  .exit_code,
              0);
  }
  EXPECT_EQ(ReadFile(Path("a.json")), ReadFile(Path("b.json")));
  ASSERT_EQ(Run("render --layout " + Path("a.json").string() + " --output " +
                Path("a.svg").string())
                .exit_code,
            0);
  ASSERT_EQ(Run("render --layout " + Path("b.json").string() + " --output " +
                Path("b.svg").string())
                .exit_code,
            0);
  EXPECT_EQ(ReadFile(Path("a.svg")), ReadFile(Path("b.svg")));
}

TEST_F(CliTest, RenderDrawsEverySquareInStackingOrder) {
  const fs::path csv = Write("u5.csv", kUniformFive);
  ASSERT_EQ(Run("optimize --input " + csv.string() +
                " --width 2 --method staircase --facing down-right --output " +
                Path("l.json").string())
                .exit_code,
            0);
  ASSERT_EQ(Run("render --layout " + Path("l.json").string() + " --output " +
                Path("l.svg").string() + " --scale 25 --fill '#ffcc00'")
                .exit_code,
            0);
  const std::string svg = ReadFile(Path("l.svg"));
  const std::regex rect(R"(<rect class="square"[^>]*fill="#ffcc00"[^>]*><title>([^<]*)</title>)");
  std::string order;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect);
       it != std::sregex_iterator(); ++it) {
    order += (*it)[1];
  }
  // Facing down: lower squares in front, so the highest is drawn first.
  EXPECT_EQ(order, "edcba");
}

TEST_F(CliTest, EvalWritesReport) {
  const fs::path csv = Write("u5.csv", kUniformFive);
  ASSERT_EQ(Run("optimize --input " + csv.string() +
                " --width 2 --method squeeze --delta 1e-4 --output " + Path("s.json").string())
                .exit_code,
            0);
  const RunResult r =
      Run("eval --layout " + Path("s.json").string() + " --report " + Path("r.json").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string report = ReadFile(Path("r.json"));
  EXPECT_NE(report.find("\"stickout\""), std::string::npos);
  EXPECT_NE(report.find("\"method\": \"squeeze\""), std::string::npos);
}

TEST_F(CliTest, OracleReportsAndSaves) {
  const fs::path csv = Write("u3.csv", "0.5\n1.0\n1.5\n");
  const RunResult r = Run("oracle --input " + csv.string() +
                          " --grid-steps 5 --width 2 --family staircase --output " +
                          Path("best.json").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("best_min_gap 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("resolution 0.25\n"), std::string::npos) << r.out;
  const RunResult ev = Run("eval --layout " + Path("best.json").string());
  EXPECT_EQ(MinGapOf(ev.out), 1.0);

  const fs::path big = Write("big.csv", "0.5\n0.6\n0.7\n0.8\n0.9\n1.0\n1.1\n1.2\n1.3\n");
  EXPECT_EQ(Run("oracle --input " + big.string() + " --grid-steps 3").exit_code, 3);
}

}  // namespace
