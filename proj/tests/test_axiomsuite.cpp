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

#include <set>
#include <string>

#include "support.hpp"

namespace daghilb {
namespace {

using namespace daghilb::testing;

GenConfig quick(Field f, std::size_t trials = 20) {
  GenConfig c;
  c.field = f;
  c.trials = trials;
  return c;
}

std::vector<std::string> all_ids() {
  std::vector<std::string> ids;
  for (const auto& s : axiom_registry()) ids.emplace_back(s.id);
  for (const auto& s : lemma_registry()) ids.emplace_back(s.id);
  return ids;
}

CheckEntry run_id(const std::string& id, const GenConfig& cfg, bool mutate) {
  for (const auto& s : axiom_registry()) {
    if (s.id == id) return run_check(s, cfg, mutate);
  }
  return check_lemma(id, cfg, mutate);
}

TEST(GenConfig, DefaultsAndValidation) {
  const GenConfig c;
  EXPECT_EQ(c.field, Field::Complex);
  EXPECT_EQ(c.dim_max, 8u);
  EXPECT_EQ(c.trials, 200u);
  EXPECT_EQ(c.seed, 42u);
  GenConfig bad = c;
  bad.trials = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = c;
  bad.dim_max = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = c;
  bad.tol_overrides["eq"] = -1.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = c;
  bad.tol_overrides["speed"] = 1.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  GenConfig ok = c;
  ok.tol_overrides["eq"] = 1e-5;
  EXPECT_EQ(ok.tolerances().eq, 1e-5);
}

TEST(Registry, EveryIdExactlyOnce) {
  std::set<std::string> seen;
  for (const auto& id : all_ids()) EXPECT_TRUE(seen.insert(id).second) << id;
  EXPECT_EQ(axiom_registry().size(), 11u);
  for (int i = 1; i <= 11; ++i) EXPECT_TRUE(seen.contains("axiom_" + std::to_string(i)));
  for (const char* lemma :
       {"factorization", "scalar_monic", "scalar_cancellation", "dagger_iso",
        "dagger_mono_extraction", "disc", "localization", "fraction_category",
        "universal_property", "fraction_dagger", "fraction_separator", "fraction_biproducts",
        "fraction_equalizer", "fraction_kernel", "simplicity", "fraction_colimits", "russo_dye",
        "colimiting_chain", "subobjects_of_unit"}) {
    EXPECT_TRUE(seen.contains(lemma)) << lemma;
  }
  const AxiomReport r = run_axioms(quick(Field::Real, 2));
  ASSERT_EQ(r.checks.size(), 11u);
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    EXPECT_EQ(r.checks[i].id, "axiom_" + std::to_string(i + 1));
  }
  EXPECT_THROW(check_axiom(0, quick(Field::Real)), std::out_of_range);
  EXPECT_THROW(check_axiom(12, quick(Field::Real)), std::out_of_range);
  EXPECT_THROW(check_lemma("nope", quick(Field::Real)), std::out_of_range);
}

struct Case {
  std::string id;
  Field field;
};

void PrintTo(const Case& c, std::ostream* os) { *os << c.id << "/" << field_name(c.field); }

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (const auto& id : all_ids()) {
    out.push_back({id, Field::Real});
    out.push_back({id, Field::Complex});
  }
  return out;
}

std::string case_name(const ::testing::TestParamInfo<Case>& info) {
  return info.param.id + (info.param.field == Field::Real ? "_Real" : "_Complex");
}

class EachCheck : public ::testing::TestWithParam<Case> {};

TEST_P(EachCheck, PassesOnFreshInstances) {
  const CheckEntry e = run_id(GetParam().id, quick(GetParam().field), false);
  EXPECT_TRUE(e.pass) << e.note;
  EXPECT_LE(e.worst_residual, kTol.eq);
  if (e.skipped) {
    EXPECT_EQ(GetParam().id, "russo_dye");
    EXPECT_EQ(GetParam().field, Field::Real);
    EXPECT_FALSE(e.note.empty());
  }
}

TEST_P(EachCheck, FailsOnItsCorruptedInstance) {
  const CheckEntry e = run_id(GetParam().id, quick(GetParam().field), true);
  if (e.skipped) {
    EXPECT_EQ(GetParam().id, "russo_dye");
    return;
  }
  EXPECT_FALSE(e.pass) << "mutation survived";
  EXPECT_FALSE(e.note.empty());
}

TEST_P(EachCheck, DeterministicForFixedSeed) {
  const GenConfig cfg = quick(GetParam().field, 5);
  const CheckEntry a = run_id(GetParam().id, cfg, false);
  const CheckEntry b = run_id(GetParam().id, cfg, false);
  EXPECT_EQ(a.instance_digest, b.instance_digest);
  EXPECT_EQ(a.worst_residual, b.worst_residual);
  EXPECT_EQ(a.pass, b.pass);
}

INSTANTIATE_TEST_SUITE_P(Registry, EachCheck, ::testing::ValuesIn(all_cases()), case_name);

TEST(Suite, SeedsChangeInstances) {
  GenConfig a = quick(Field::Complex, 3), b = a;
  b.seed = 43;
  EXPECT_NE(check_axiom(1, a).instance_digest, check_axiom(1, b).instance_digest);
}

TEST(Suite, RealRunMarksRussoDyeSkipped) {
  const CheckEntry e = check_lemma("russo_dye", quick(Field::Real, 1));
  EXPECT_TRUE(e.skipped);
  EXPECT_TRUE(e.pass);
}

}  // namespace
}  // namespace daghilb
