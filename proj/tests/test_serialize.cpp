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

#include "daghilb/serialize.hpp"
#include "support.hpp"

namespace daghilb {
namespace {

using namespace daghilb::testing;

template <typename T, typename Decode>
void expect_round_trip(const T& value, Decode decode) {
  const std::string first = to_json(value).dump(2);
  const std::string second = to_json(decode(parse_json(first))).dump(2);
  EXPECT_EQ(first, second);
}

TEST(Serialize, MatrixAndMorRoundTrip) {
  for (int i = 0; i < 50; ++i) {
    const Field f = i % 2 ? Field::Real : Field::Complex;
    Sampler t(50 + std::uint64_t(i), "m", f, 5);
    const ConMor m = gen_contraction(t, t.obj(t.index(0, 5)), t.obj(t.index(0, 5)));
    expect_round_trip(m.mat(), matrix_from_json);
    expect_round_trip(m.mor(), mor_from_json);
    EXPECT_EQ(mor_from_json(to_json(m.mor())), m.mor());
    const Fraction fr(m, t.scalar(0.1, 1.0));
    expect_round_trip(fr, fraction_from_json);
  }
}

TEST(Serialize, RejectsMalformedInput) {
  EXPECT_THROW(parse_json("{"), ParseError);
  EXPECT_THROW(matrix_from_json(json::object()), ParseError);
  EXPECT_THROW(matrix_from_json(json{{"field", "Q"}, {"rows", 1}, {"cols", 1}, {"entries", {{1, 0}}}}),
               ParseError);
  EXPECT_THROW(matrix_from_json(json{{"field", "R"}, {"rows", 1}, {"cols", 2}, {"entries", {{1, 0}}}}),
               ParseError);
  EXPECT_THROW(matrix_from_json(json{{"field", "R"}, {"rows", 1}, {"cols", 1}, {"entries", {{1, 2}}}}),
               ParseError);
  EXPECT_THROW(matrix_from_json(json{{"field", "R"}, {"rows", -1}, {"cols", 1}, {"entries", json::array()}}),
               ParseError);
  json m = to_json(Mor(real({{0.5}})));
  m["dom"] = 2;
  EXPECT_THROW(mor_from_json(m), ParseError);
  // Well-formed but not a contraction.
  const json big{{"num", to_json(Mor(real({{2.0}})))}, {"den", {1.0, 0.0}}};
  EXPECT_THROW(fraction_from_json(big), Inadmissible);
}

TEST(Serialize, ChainSpecAndDiagram) {
  const ChainSpec spec{HObj{Field::Real, 2}, {0.5, 0.75}, 1.0};
  expect_round_trip(spec, chain_spec_from_json);
  const ConMor half = con(real({{0.5}}));
  const HObj i{Field::Real, 1};
  const FiniteDiagram d({i, i, i}, {{0, 1, half}, {1, 2, half}, {0, 2, con(real({{0.25}}))}});
  expect_round_trip(d, diagram_from_json);
}

TEST(Serialize, ReportRoundTripsByteForByte) {
  GenConfig cfg;
  cfg.trials = 3;
  cfg.tol_overrides["eq"] = 1e-6;
  const AxiomReport r = run_axioms(cfg);
  const std::string first = to_json(r).dump(2);
  EXPECT_EQ(to_json(report_from_json(parse_json(first))).dump(2), first);
}

}  // namespace
}  // namespace daghilb
