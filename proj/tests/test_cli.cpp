// Copyright 2026 The daghilb Authors
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

#include "daghilb/cli.hpp"
#include "support.hpp"

namespace daghilb {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "daghilb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(DAGHILB_SAMPLES_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("DAGHILB_SEED"); }
  void TearDown() override { unsetenv("DAGHILB_SEED"); }
};

TEST_F(Cli, DefaultAxiomRunPasses) {
  const CliRun r = cli({"axioms", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["checks"].size(), 11u);
  EXPECT_EQ(j["config"]["field"], "C");
  EXPECT_EQ(j["config"]["trials"], 200);
  EXPECT_EQ(j["config"]["seed"], 42);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c["id"];
}

TEST_F(Cli, TextReportIsATable) {
  const CliRun r = cli({"axioms", "--trials", "1", "--seed", "1"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("id", 0), 0u);
  EXPECT_NE(header.find("worst"), std::string::npos);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) rows += line.rfind("axiom_", 0) == 0 ? 1 : 0;
  EXPECT_EQ(rows, 11);
}

TEST_F(Cli, DeterministicSingleTrial) {
  const CliRun a = cli({"axioms", "--trials", "1", "--seed", "1", "--json"});
  const CliRun b = cli({"axioms", "--trials", "1", "--seed", "1", "--json"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const CliRun c = cli({"axioms", "--trials", "1", "--seed", "2", "--json"});
  EXPECT_NE(a.out, c.out);
}

TEST_F(Cli, EnvironmentSeedOverridesFlag) {
  setenv("DAGHILB_SEED", "7", 1);
  const CliRun env = cli({"axioms", "--trials", "1", "--seed", "1", "--json"});
  unsetenv("DAGHILB_SEED");
  const CliRun flag = cli({"axioms", "--trials", "1", "--seed", "7", "--json"});
  EXPECT_EQ(env.out, flag.out);
  EXPECT_EQ(json::parse(env.out)["config"]["seed"], 7);
  setenv("DAGHILB_SEED", "seven", 1);
  EXPECT_EQ(cli({"axioms", "--trials", "1"}).code, kExitUsage);
}

TEST_F(Cli, RealFieldSkipsRussoDyeWithReason) {
  const CliRun r = cli({"lemmas", "--field", "R", "--trials", "3", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  bool found = false;
  const json report = json::parse(r.out);
  for (const auto& c : report["checks"]) {
    if (c["id"] == "russo_dye") {
      found = true;
      EXPECT_TRUE(c["skipped"].get<bool>());
      EXPECT_FALSE(c["note"].get<std::string>().empty());
    } else {
      EXPECT_FALSE(c["skipped"].get<bool>());
    }
  }
  EXPECT_TRUE(found);
}

TEST_F(Cli, ExpectFailFlipsExitSemantics) {
  EXPECT_EQ(cli({"axioms", "--trials", "3", "--expect-fail"}).code, kExitOk);
  EXPECT_EQ(cli({"lemmas", "--trials", "3", "--expect-fail"}).code, kExitOk);
  EXPECT_EQ(cli({"lemmas", "--trials", "3", "--field", "R", "--expect-fail"}).code, kExitOk);
  // A tolerance so loose that corruptions are accepted makes some mutants survive.
  EXPECT_EQ(cli({"axioms", "--trials", "3", "--tol-eq", "10", "--expect-fail"}).code, kExitDomain);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"axioms", "--field", "Q"}).code, kExitUsage);
  EXPECT_EQ(cli({"axioms", "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"axioms", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(cli({"factor", sample("missing.json")}).code, kExitUsage);
  EXPECT_EQ(cli({"fraction", "divide", sample("fraction_05_1.json")}).code, kExitUsage);
  EXPECT_EQ(cli({"fraction", "eq", sample("fraction_05_1.json")}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST_F(Cli, FactorSample) {
  const CliRun r = cli({"factor", sample("contraction_rank1.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  const Factorization f{ConMor::admit(mor_from_json(j["factorization"]["e"])),
                        ConMor::admit(mor_from_json(j["factorization"]["k"]))};
  EXPECT_EQ(j["residuals"]["dim_e"], 1);
  EXPECT_LE(distance(f.k.mat(), testing::real({{0.6}, {0.8}})), 1e-15);
  EXPECT_LE(distance(f.e.mat(), testing::real({{1, 0}})), 1e-15);
  EXPECT_LE(j["residuals"]["reconstruction"].get<double>(), 1e-12);
}

TEST_F(Cli, FactorZeroGivesEmptyFactors) {
  const CliRun r = cli({"factor", sample("zero_2x2.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["residuals"]["dim_e"], 0);
  EXPECT_TRUE(j["factorization"]["e"]["entries"].empty());
  EXPECT_TRUE(j["factorization"]["k"]["entries"].empty());
}

TEST_F(Cli, FactorRejectsNonContraction) {
  const CliRun r = cli({"factor", sample("norm_1_5.json")});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("norm 1.5"), std::string::npos) << r.err;
}

TEST_F(Cli, FractionOperations) {
  const CliRun eq = cli({"fraction", "eq", sample("fraction_03_06.json"), sample("fraction_05_1.json")});
  EXPECT_EQ(eq.code, kExitOk);
  EXPECT_EQ(eq.out, "true\n");
  const CliRun mismatch =
      cli({"fraction", "eq", sample("fraction_03_06.json"), sample("fraction_05_1_dim3.json")});
  EXPECT_EQ(mismatch.code, kExitUsage);

  const CliRun round = cli({"fraction", "roundtrip", sample("norm_2.json")});
  ASSERT_EQ(round.code, kExitOk) << round.err;
  const Mor original = mor_from_json(parse_json(slurp(sample("norm_2.json"))));
  const Mor back = mor_from_json(json::parse(round.out));
  EXPECT_LE(distance(back.mat(), original.mat()), 1e-12);

  const CliRun lifted = cli({"fraction", "from-hilb", sample("norm_2.json")});
  ASSERT_EQ(lifted.code, kExitOk);
  const Fraction f = fraction_from_json(json::parse(lifted.out));
  EXPECT_NEAR(f.den().re(), 1.0 / opnorm(original.mat()), 1e-15);

  const CliRun comp = cli({"fraction", "compose", sample("fraction_03_06.json"), sample("fraction_05_1.json")});
  ASSERT_EQ(comp.code, kExitOk);
  const Fraction c = fraction_from_json(json::parse(comp.out));
  EXPECT_LE(distance(to_hilb(c).mat(), testing::sid(Field::Real, 2, 0.25)), 1e-15);

  const CliRun hilb = cli({"fraction", "to-hilb", sample("fraction_03_06.json")});
  ASSERT_EQ(hilb.code, kExitOk);
  EXPECT_LE(distance(mor_from_json(json::parse(hilb.out)).mat(), testing::sid(Field::Real, 2, 0.5)), 1e-15);
}

TEST_F(Cli, ColimitSamples) {
  const CliRun chain = cli({"colimit", sample("chain_halves.json"), "--json"});
  ASSERT_EQ(chain.code, kExitOk) << chain.err;
  const json j = json::parse(chain.out);
  ASSERT_EQ(j["legs"].size(), 3u);
  const double expected[] = {0.5, 0.75, 0.875};
  for (std::size_t n = 0; n < 3; ++n) {
    EXPECT_EQ(mor_from_json(j["legs"][n]).mat()(0, 0).real(), expected[n]);
  }

  const CliRun single = cli({"colimit", sample("diagram_single.json"), "--json"});
  ASSERT_EQ(single.code, kExitOk);
  const json s = json::parse(single.out);
  EXPECT_EQ(s["top"], 0);
  EXPECT_EQ(mor_from_json(s["legs"][0]).mat(), Matrix::identity(Field::Complex, 2));

  EXPECT_EQ(cli({"colimit", sample("diagram_nonfunctorial.json")}).code, kExitDomain);
  EXPECT_EQ(cli({"colimit", sample("diagram_chain_isometries.json")}).code, kExitOk);
}

TEST_F(Cli, JsonOutputRoundTrips) {
  const CliRun r = cli({"lemmas", "--trials", "2", "--json"});
  EXPECT_EQ(to_json(report_from_json(json::parse(r.out))).dump(2) + "\n", r.out);
  const CliRun f = cli({"factor", sample("contraction_rank1.json"), "--json"});
  EXPECT_EQ(json::parse(f.out).dump(2) + "\n", f.out);
}

TEST_F(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "daghilb_cli_out.json";
  std::filesystem::remove(path);
  const CliRun r = cli({"axioms", "--trials", "1", "--json", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(json::parse(slurp(path.string()))["checks"].size(), 11u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace daghilb
