// Copyright 2026 The quadsim Authors
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

#include <cmath>
#include <numbers>
#include <random>

#include "quadsim/circuits/catalogue.hpp"
#include "quadsim/dsl/dsl.hpp"
#include "verify.hpp"

namespace quadsim::dsl {
namespace {

using circuits::Circuit;

TEST(Parse, MinimalProgram) {
  const auto r = parse("modes 2\ninput bell 1 2\nbs 0.5 1 2\n");
  ASSERT_TRUE(r.ok()) << (r.diagnostics.empty() ? "" : r.diagnostics[0].message);
  EXPECT_EQ(r.circuit->modes, 2);
  EXPECT_EQ(r.circuit->inputs.size(), 1u);
  ASSERT_EQ(r.circuit->steps.size(), 1u);
  EXPECT_EQ(std::get<optics::Element>(r.circuit->steps[0].op), optics::beam_splitter(0.5, 1, 2));
}

TEST(Parse, AngleExpressions) {
  const auto r = parse("modes 3\ninput bell 1 3\nrot pi/4 3\n");
  ASSERT_TRUE(r.ok());
  const auto& e = std::get<optics::Element>(r.circuit->steps[0].op);
  EXPECT_EQ(e.kind, optics::ElementKind::Rotator);
  EXPECT_NEAR(e.param, std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(*parse_angle("-pi/4"), -std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(*parse_angle("0.25"), 0.25, 1e-15);
  EXPECT_FALSE(parse_angle("pie"));
  EXPECT_NEAR(*parse_angle(format_angle(std::numbers::pi / 2)), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(*parse_angle(format_angle(0.123456789)), 0.123456789, 1e-15);
}

TEST(Parse, ModeTokens) {
  const auto plain = parse_mode("3");
  ASSERT_TRUE(plain);
  EXPECT_EQ(plain->spatial, 3);
  EXPECT_FALSE(plain->pol);
  const auto p = parse_mode("2'");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->spatial, fock::primed(2));
  EXPECT_EQ(format_mode(fock::primed(2)), "2'");
  EXPECT_FALSE(parse_mode("x"));
}

TEST(Parse, DiagnosticsCarryPositions) {
  const auto r = parse("modes 2\nfrobnicate 1 2\n");
  ASSERT_FALSE(r.ok());
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].line, 2);
  EXPECT_EQ(r.diagnostics[0].column, 1);
}

TEST(Parse, ArityMismatch) {
  const auto r = parse("modes 2\nbs 0.5 1\n");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostics[0].line, 2);
}

TEST(Parse, UndeclaredMode) {
  const auto r = parse("modes 2\nbs 0.5 1 9\n");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostics[0].line, 2);
  EXPECT_GT(r.diagnostics[0].column, 1);
}

TEST(Parse, RecoversAfterABadLine) {
  const auto r = parse("modes 2\nbogus\nbs 0.5 1 2\nalso bogus\n");
  ASSERT_FALSE(r.ok());
  ASSERT_GE(r.diagnostics.size(), 2u);
  EXPECT_EQ(r.diagnostics[0].line, 2);
  EXPECT_EQ(r.diagnostics[1].line, 4);
}

TEST(Parse, LiteralsAndPredicates) {
  const auto lit = parse_literal("2=H1,3=V1");
  ASSERT_TRUE(lit);
  EXPECT_EQ(lit->entries.size(), 2u);
  EXPECT_TRUE(parse_predicate("one_h_one_v"));
  std::string err;
  EXPECT_FALSE(parse_literal("2=Q", &err));
  EXPECT_FALSE(err.empty());
}

TEST(RoundTrip, WholeCatalogue) {
  for (const auto& name : circuits::catalogue_names()) {
    const Circuit c = circuits::builtin_circuit(name);
    const std::string text = print(c);
    const auto r = parse(text);
    ASSERT_TRUE(r.ok()) << name << ": " << (r.diagnostics.empty() ? "" : to_string(r.diagnostics[0]));
    EXPECT_EQ(*r.circuit, c) << name;
    EXPECT_EQ(print(*r.circuit), text) << name;
  }
}

TEST(Fuzz, RandomLinesNeverThrow) {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::string line = tools::random_line(rng);
    EXPECT_NO_THROW(parse("modes 4\nprimed 2\ninput bell 1 2\n" + line)) << line;
  }
}

}  // namespace
}  // namespace quadsim::dsl
