// Copyright 2026 The tdepth Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tdepth/anf.hpp"
#include "tdepth/circuit.hpp"
#include "tdepth/cli.hpp"

namespace tdepth {
namespace {

struct ToolRun {
  int code;
  std::string out;
  std::string err;
};

ToolRun tool(std::vector<std::string> args) {
  args.insert(args.begin(), "tdepth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("tdepth_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SynthLowMcWithVerification) {
  const ToolRun r = tool({"synth", "--anf", file("lowmc.anf", "x0 + x1*x2\nx0 + x1 + x0*x2\nx0 + x1 + x2 + x0*x1\n"),
                      "--variant", "tdepth1", "--verify", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["resources"]["t_depth"], 1);
  EXPECT_EQ(j["resources"]["t_count"], 12);
  EXPECT_TRUE(j["verification"]["failures"].empty());
}

TEST_F(CliTest, SynthConstantHasNoT) {
  const ToolRun r = tool({"synth", "--anf", file("c.anf", "1\n"), "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["resources"]["t_count"], 0);
}

TEST_F(CliTest, SynthExampleTwoFromExpression) {
  const ToolRun r = tool({"synth", "--expr", "x0*x2 + x1*x3 + x0*x1*x2*x3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("t_count       20"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("t_depth       2"), std::string::npos);
}

TEST_F(CliTest, SynthWritesCircuitAndReportFiles) {
  const std::string circ = path("out.qasm"), rep = path("report.json");
  const ToolRun r = tool({"synth", "--expr", "x0*x1;x1 + x2", "--out", circ,
                      "--report", rep, "--toffoli"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(circ);
  std::stringstream text;
  text << in.rdbuf();
  const Circuit c = parse_circuit(text.str());
  EXPECT_EQ(c.granularity(), Granularity::Toffoli);
  std::ifstream rj(rep);
  EXPECT_EQ(nlohmann::json::parse(rj)["m"], 2);

  const ToolRun v = tool({"verify", "--circuit", circ, "--expr", "x0*x1;x1 + x2"});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  const ToolRun bad = tool({"verify", "--circuit", circ, "--expr", "x0*x1;x1 + x0*x2"});
  EXPECT_EQ(bad.code, 3);
  // A shape mismatch is a usage error, not a failed check.
  EXPECT_EQ(tool({"verify", "--circuit", circ, "--expr", "x0*x1;x1"}).code, 2);
}

TEST_F(CliTest, VerifyAcceptsCliffordTCircuits) {
  const std::string circ = path("ct.qasm");
  ASSERT_EQ(tool({"synth", "--expr", "x0*x1 + x2", "--out", circ}).code, 0);
  const ToolRun v = tool({"verify", "--circuit", circ, "--expr", "x0*x1 + x2", "--json"});
  EXPECT_EQ(v.code, 0) << v.out;
}

TEST_F(CliTest, TruthTableInput) {
  const ToolRun r = tool({"synth", "--table", file("t.tt", "0001\n"), "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("t_count       4"), std::string::npos);
}

TEST_F(CliTest, ParseErrorsExitTwo) {
  const ToolRun r = tool({"synth", "--anf", file("bad.anf", "x0 + + x1\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;
  EXPECT_EQ(tool({"synth", "--anf", path("missing.anf")}).code, 2);
  EXPECT_EQ(tool({"synth"}).code, 2);
  EXPECT_EQ(tool({"synth", "--expr", "x0", "--anf", "lowmc"}).code, 2);
  EXPECT_EQ(tool({"synth", "--expr", "x0", "--variant", "fast"}).code, 2);
  EXPECT_EQ(tool({"frobnicate"}).code, 2);
  EXPECT_EQ(tool({"--help"}).code, 0);
}

TEST_F(CliTest, EstimateClosedForms) {
  const ToolRun r = tool({"estimate", "-n", "8", "-m", "8", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bounds"][0]["ancilla"], "2801");
  EXPECT_EQ(j["closed_form_equals_summation"], true);

  const auto small = nlohmann::json::parse(tool({"estimate", "-n", "2", "-m", "1", "--json"}).out);
  EXPECT_EQ(small["bounds"][0]["t_count"], "4");
  EXPECT_EQ(small["bounds"][0]["t_depth"], "1");
  EXPECT_EQ(tool({"estimate", "-n", "1"}).code, 2);
}

TEST_F(CliTest, EstimateBuiltinAesSbox) {
  const ToolRun r = tool({"estimate", "--anf", "aes_sbox", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bounds"][2]["source"], "function-specific");
  EXPECT_EQ(j["bounds"][2]["ancilla"], "2778");
}

TEST_F(CliTest, TablesExitZeroWithFlags) {
  for (const char* which : {"sbox", "round", "aes", "compare", "all"}) {
    const ToolRun r = tool({"tables", which});
    EXPECT_EQ(r.code, 0) << which << r.out;
  }
  const ToolRun c = tool({"tables", "compare"});
  EXPECT_NE(c.out.find("flagged"), std::string::npos);
  EXPECT_NE(c.out.find("reference"), std::string::npos);
  EXPECT_EQ(tool({"tables", "nope"}).code, 2);
}

TEST_F(CliTest, OutputIsByteReproducible) {
  const ToolRun a = tool({"synth", "--anf", "lowmc", "--json", "--verify"});
  const ToolRun b = tool({"synth", "--anf", "lowmc", "--json", "--verify"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(tool({"tables", "all", "--json"}).out, tool({"tables", "all", "--json"}).out);
}

TEST_F(CliTest, GadgetCheckPasses) {
  const ToolRun r = tool({"gadget-check"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("k=7: pass; tdepth1 T 24 T-depth 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("k=1: pass; tdepth1 T 0 T-depth 0 CNOT 1"), std::string::npos);
}

}  // namespace
}  // namespace tdepth
