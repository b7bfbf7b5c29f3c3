// Copyright 2026 The schoolchoice Authors
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

// End-to-end runs of the schoolchoice binary.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome Exec(const std::string& args) {
  const std::string cmd = std::string("\"") + SCHOOLCHOICE_CLI + "\" " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Data(const std::string& name) {
  return std::string("\"") + SCHOOLCHOICE_DATA_DIR + "/" + name + "\"";
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path Scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "schoolchoice_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(CliSolve, LocvOnFirstContrastInstance) {
  Outcome r = Exec("solve " + Data("contrast1.json") + " --strategy locv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("c1": [)" "\n" R"(      "s2")"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(R"("value": "2/11")"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(R"("kind": "exact")"), std::string::npos);
}

TEST(CliSolve, LoicvOnSecondContrastInstance) {
  Outcome r = Exec("solve " + Data("contrast2.json") + " --strategy loicv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("value": "3/4")"), std::string::npos) << r.out;
}

TEST(CliSolve, SingleStudentSingleCollege) {
  Outcome r = Exec("solve " + Data("single.json") + " --strategy heuf --trace");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("pros": {)" "\n" R"(    "value": "1")"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(R"("trace")"), std::string::npos);
}

TEST(CliSolve, MissingFileIsInputError) {
  EXPECT_EQ(Exec("solve /nonexistent/instance.json --strategy heuf").code, 2);
}

TEST(CliSolve, MalformedInstanceIsInputError) {
  auto p = Scratch("bad.json");
  std::ofstream(p) << R"({"students": ["s1"], "colleges": [})";
  EXPECT_EQ(Exec("solve \"" + p.string() + "\" --strategy heuf").code, 2);
}

TEST(CliSolve, UnknownStrategyIsInputError) {
  EXPECT_EQ(Exec("solve " + Data("contrast1.json") + " --strategy nope").code, 2);
}

TEST(CliPros, GivenMatching) {
  Outcome r = Exec("pros " + Data("contrast2.json") +
               R"( --matching '{"c1":["s2"],"c2":["s1"],"c3":["s3"]}')");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("value": "3/4")"), std::string::npos) << r.out;
}

TEST(CliOptimal, ReportsRatios) {
  Outcome r = Exec("optimal " + Data("contrast1.json") + " --strategy locv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("ratio": "2/11")"), std::string::npos) << r.out;
}

TEST(CliOptimal, BudgetExceeded) {
  EXPECT_EQ(Exec("optimal " + Data("contrast1.json") + " --budget 10").code, 3);
}

TEST(CliAudit, RunsBothLevels) {
  Outcome r = Exec("audit-ic " + Data("contrast1.json") + " --strategy loicv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("level": "ic-c")"), std::string::npos);
  EXPECT_NE(r.out.find(R"("level": "ic-r")"), std::string::npos);
}

TEST(CliGoldenCheck, AllPass) {
  Outcome r = Exec("paper-check");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS contrast3.loicv.pros  expected 9/17"), std::string::npos) << r.out;
}

TEST(CliGoldenCheck, PerturbedExpectationFailsByName) {
  Outcome r = Exec("paper-check --override contrast3.loicv.pros=10/17");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL contrast3.loicv.pros  expected 10/17  got 9/17"), std::string::npos)
      << r.out;
}

TEST(CliGoldenCheck, UnknownOverrideIsInputError) {
  EXPECT_EQ(Exec("paper-check --override no.such.golden=1").code, 2);
}

TEST(CliExperiment, DeterministicAcrossRunsAndThreads) {
  auto a = Scratch("a.csv");
  auto b = Scratch("b.csv");
  auto svg = Scratch("a.svg");
  const std::string common = " --trials 200 --n 3 --capacities ones --seed 42 --format csv";
  ASSERT_EQ(Exec("experiment" + common + " --threads 4 --out \"" + a.string() + "\" --svg \"" +
                 svg.string() + "\"")
                .code,
            0);
  ASSERT_EQ(Exec("experiment" + common + " --threads 1 --out \"" + b.string() + "\"").code, 0);
  const std::string csv = Slurp(a);
  EXPECT_EQ(csv, Slurp(b));
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("trial,seed,n,m,capacity_rule,strategy,", 0), 0u);
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 800);
  const std::string plot = Slurp(svg);
  EXPECT_NE(plot.find(R"(viewBox="0 0 800 500")"), std::string::npos);
}

TEST(CliExperiment, BudgetExceeded) {
  EXPECT_EQ(Exec("experiment --trials 1 --n 6 --budget 1000").code, 3);
}

TEST(CliGen, FamilyRoundTripsThroughSolve) {
  auto p = Scratch("zero.json");
  ASSERT_EQ(Exec("gen zero-ratio --delta 1/10 --epsilon 1/1000 --out \"" + p.string() + "\"").code,
            0);
  Outcome r = Exec("solve \"" + p.string() + "\" --strategy heuf");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("value": "102/10403")"), std::string::npos) << r.out;
}

TEST(CliGen, RandomIsSeeded) {
  EXPECT_EQ(Exec("gen random --n 3 --m 3 --seed 5").out, Exec("gen random --n 3 --m 3 --seed 5").out);
  EXPECT_NE(Exec("gen random --n 3 --m 3 --seed 5").out, Exec("gen random --n 3 --m 3 --seed 6").out);
}

TEST(CliGen, UnknownFamilyIsInputError) {
  EXPECT_EQ(Exec("gen no-such-family").code, 2);
}

}  // namespace
