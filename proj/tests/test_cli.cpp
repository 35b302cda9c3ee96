// Copyright 2026 The graphshare Authors.
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


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "graphshare/report.hpp"

namespace graphshare {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "graphshare");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string data(const std::string& name) { return std::string(GRAPHSHARE_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("graphshare_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Report, ParsesFieldsAndBareValue) {
  auto r = parse_report_line("value 1/1");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->record, "value");
  EXPECT_EQ(r->at("value"), "1/1");
  r = parse_report_line("fail lemma=x seed=3 reason=\"two words\" S=");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->at("reason"), "two words");
  EXPECT_EQ(r->at("S"), "");
  EXPECT_FALSE(parse_report_line(""));
  EXPECT_FALSE(parse_report_line("a k=1 k=2"));
  EXPECT_FALSE(parse_report_line("a k=\"open"));
}

TEST(Report, LibraryLinesRoundTrip) {
  StructuralOutcome o;
  o.tag = OutcomeTag::kCycleSet;
  o.set = VertexSet{1, 4};
  o.achieved = Weight(3, 2);
  o.constant = Weight(1, 52);
  auto r = parse_report_line(format_outcome(o));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->record, "outcome");
  EXPECT_EQ(r->at("tag"), "CycleSet");
  EXPECT_EQ(r->at("S"), "1,4");
  EXPECT_EQ(*parse_weight(r->at("achieved")), Weight(3, 2));

  CertifiedStrategy cs;
  cs.lemma = "strat-legal";
  cs.bound = Weight(5, 3);
  cs.worst_case_constant = Weight(1, 80);
  r = parse_report_line(format_certified(cs, Weight(2)));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->at("lemma"), "strat-legal");
  EXPECT_EQ(*parse_weight(r->at("bound")), Weight(5, 3));
  EXPECT_EQ(*parse_weight(r->at("realized")), Weight(2));
  EXPECT_EQ(*parse_weight(r->at("paperConstant")), Weight(1, 80));

  SuiteResult s{"struct-full", 4, 3, 1, {{9, "bad \"thing\"\nhere"}}};
  r = parse_report_line(format_suite(s));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->at("passed"), "3");
  r = parse_report_line(format_failure("struct-full", s.failures[0]));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->at("seed"), "9");
  EXPECT_EQ(r->at("reason"), "bad 'thing' here");
}

TEST(Cli, ValueOfOddConstruction) {
  auto r = run_cli({"value", "--input", data("h3.graph")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "value 1/1\n");
}

TEST(Cli, ValueOfHedgehogs) {
  for (const char* name : {"hedgehog5_path.graph", "hedgehog5_star.graph"}) {
    auto r = run_cli({"value", "-i", data(name)});
    EXPECT_EQ(r.out, "value 1/1\n") << name;
  }
}

TEST(Cli, CertifySingleVertex) {
  auto r = run_cli({"certify", "--input", data("single.graph")});
  EXPECT_EQ(r.code, 0) << r.err;
  auto out = lines(r.out);
  ASSERT_EQ(out.size(), 3u);
  auto dich = parse_report_line(out[0]);
  EXPECT_EQ(dich->record, "dichotomy");
  auto cert = parse_report_line(out[1]);
  EXPECT_EQ(cert->record, "certified");
  EXPECT_EQ(cert->at("bound"), "7/1");
  EXPECT_EQ(cert->at("realized"), "7/1");
  EXPECT_EQ(out[2], "check status=pass");
}

TEST(Cli, CertifySamples) {
  for (const char* name : {"h3.graph", "ring5.graph", "random11.graph"}) {
    auto r = run_cli({"certify", "-i", data(name), "--n", "4"});
    EXPECT_EQ(r.code, 0) << name << r.err;
    auto cert = parse_report_line(lines(r.out).at(1));
    ASSERT_TRUE(cert);
    EXPECT_LE(*parse_weight(cert->at("bound")), *parse_weight(cert->at("realized"))) << name;
  }
}

TEST(Cli, CertifyRejectsEvenGraph) {
  auto r = run_cli({"certify", "-i", data("hedgehog5_path.graph")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("kind=input"), std::string::npos);
}

TEST(Cli, VerifyStructCycle) {
  auto r = run_cli({"verify", "struct-cycle", "--seeds", "100", "--size", "12"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "verify lemma=struct-cycle seeds=100 passed=100 failed=0\n");
}

TEST(Cli, VerifyJobsMatchSequential) {
  auto one = run_cli({"verify", "all", "--seeds", "20", "--size", "9"});
  auto four = run_cli({"verify", "all", "--seeds", "20", "--size", "9", "--jobs", "4"});
  EXPECT_EQ(one.code, 0) << one.out;
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(lines(one.out).size(), verify_suites().size());
}

TEST(Cli, VerifyUnknownLemma) {
  auto r = run_cli({"verify", "no-such-lemma"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, EnvironmentSuppliesFlags) {
  ::setenv("GRAPHSHARE_SEEDS", "7", 1);
  auto r = run_cli({"verify", "observation"});
  ::unsetenv("GRAPHSHARE_SEEDS");
  EXPECT_EQ(r.out, "verify lemma=observation seeds=7 passed=7 failed=0\n");
  ::setenv("GRAPHSHARE_INPUT", data("h3.graph").c_str(), 1);
  r = run_cli({"value"});
  ::unsetenv("GRAPHSHARE_INPUT");
  EXPECT_EQ(r.out, "value 1/1\n");
}

TEST(Cli, PlayPrintsParseableLog) {
  auto r = run_cli({"play", "-i", data("random11.graph"), "--alice", "master", "--bob", "random", "--seed", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto out = lines(r.out);
  ASSERT_EQ(out.size(), 12u);
  Weight alice(0), bob(0);
  for (int k = 0; k < 11; ++k) {
    auto m = parse_report_line(out[k]);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->record, "move");
    EXPECT_EQ(m->at("index"), std::to_string(k + 1));
    (m->at("player") == "alice" ? alice : bob) += *parse_weight(m->at("weight"));
  }
  auto res = parse_report_line(out.back());
  EXPECT_EQ(*parse_weight(res->at("aliceGain")), alice);
  EXPECT_EQ(*parse_weight(res->at("bobGain")), bob);
}

TEST(Cli, PlayRejectsMasterBob) {
  auto r = run_cli({"play", "-i", data("h3.graph"), "--bob", "master"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, DecomposeChecksEveryOutcome) {
  auto r = run_cli({"decompose", "-i", data("random11.graph"), "--n", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  int checks = 0;
  for (const auto& line : lines(r.out)) {
    auto p = parse_report_line(line);
    ASSERT_TRUE(p) << line;
    if (p->record == "check") {
      ++checks;
      EXPECT_EQ(p->at("status"), "pass") << line;
    }
  }
  EXPECT_EQ(checks, 3);
}

TEST(Cli, GenerateIsDeterministicAndReadable) {
  auto a = run_cli({"generate", "--family", "random", "--size", "9", "--seed", "4", "--parity", "odd"});
  auto b = run_cli({"generate", "--family", "random", "--size", "9", "--seed", "4", "--parity", "odd"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const WeightedGraph g = parse_graph(a.out);
  EXPECT_EQ(g.size(), 9);
  EXPECT_TRUE(is_connected(g));

  const std::string path = (std::filesystem::temp_directory_path() / "graphshare_cli_gen.graph").string();
  auto c = run_cli({"generate", "--family", "odd", "--size", "2", "--out", path});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(format_graph(read_graph_file(path)), format_graph(odd_construction(2)));
}

TEST(Cli, GenerateUnknownFamily) { EXPECT_EQ(run_cli({"generate", "--family", "nope"}).code, 2); }

TEST(Cli, ParseErrorsExitNonzero) {
  auto r = run_cli({"value", "-i", write_temp("bad.graph", "graph 2 1\nv 0 1\nv 1 x\ne 0 1\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("kind=parse"), std::string::npos);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(run_cli({"value", "-i", "/nonexistent/graph"}).code, 2);
  EXPECT_EQ(run_cli({"value"}).code, 2);
  EXPECT_EQ(run_cli({"value", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"verify", "struct-full", "--n", "1"}).code, 2);
}

TEST(Cli, DisconnectedGraphIsAnInputError) {
  auto r = run_cli({"value", "-i", write_temp("split.graph", "graph 2 0\nv 0 1\nv 1 1\n")});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, BudgetExhaustionExitsNonzero) {
  auto r = run_cli({"value", "-i", data("h3.graph"), "--budget", "10"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("kind=budget"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, 0); }

}  // namespace
}  // namespace graphshare
