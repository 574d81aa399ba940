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

#include "quadsim/circuits/states.hpp"
#include "quadsim/detection/measurement.hpp"
#include "quadsim/dsl/dsl.hpp"
#include "quadsim/error.hpp"

namespace quadsim::detection {
namespace {

using fock::FockState;
using fock::H;
using fock::OccupationVector;
using fock::V;

DetectionPattern pattern(std::map<int, ModeCount> counts, Resolving r = Resolving::PolarizationResolving) {
  return {r, std::move(counts)};
}

TEST(Pattern, Rendering) {
  EXPECT_EQ(to_string(pattern({{2, {1, 1, 0}}, {3, {1, 0, 1}}})), "2=H1,3=V1");
  EXPECT_EQ(to_string(pattern({{2, {0, 0, 0}}})), "vacuum");
  EXPECT_EQ(to_string(pattern({{fock::primed(1), {1, 0, 0}}}, Resolving::NumberOnly)), "1'=1");
}

TEST(Pattern, LiteralPinsUnnamedPolarization) {
  const auto lit = dsl::parse_literal("3=V1");
  ASSERT_TRUE(lit);
  EXPECT_TRUE(lit->matches(pattern({{2, {}}, {3, {1, 0, 1}}})));
  EXPECT_FALSE(lit->matches(pattern({{2, {}}, {3, {2, 1, 1}}})));
  EXPECT_FALSE(lit->matches(pattern({{2, {1, 1, 0}}, {3, {1, 0, 1}}})));
}

TEST(Pattern, TotalLiteralOnNumberDetectors) {
  const auto lit = dsl::parse_literal("3=1");
  ASSERT_TRUE(lit);
  EXPECT_TRUE(lit->matches(pattern({{3, {1, 0, 0}}}, Resolving::NumberOnly)));
  EXPECT_TRUE(lit->matches(pattern({{3, {1, 1, 0}}})));
  EXPECT_FALSE(lit->matches(pattern({{3, {2, 0, 0}}}, Resolving::NumberOnly)));
}

TEST(Pattern, NamedPredicates) {
  const auto hv = pattern({{1, {1, 1, 0}}, {2, {1, 0, 1}}});
  const auto bunched = pattern({{1, {2, 2, 0}}, {2, {}}});
  EXPECT_TRUE(Predicate{NamedPredicate::OneHOneV}.matches(hv));
  EXPECT_TRUE(Predicate{NamedPredicate::PairNoBunch}.matches(hv));
  EXPECT_FALSE(Predicate{NamedPredicate::PairNoBunch}.matches(bunched));
  EXPECT_TRUE(Predicate{NamedPredicate::TwoPhotons}.matches(bunched));
  EXPECT_FALSE(Predicate{NamedPredicate::Vacuum}.matches(hv));
  EXPECT_EQ(to_string(NamedPredicate::PairNoBunch), "pair_no_bunch");
  EXPECT_EQ(named_predicate_from_string("one_h_one_v"), NamedPredicate::OneHOneV);
}

TEST(Outcomes, ProbabilitiesSumToOne) {
  auto reg = fock::make_registry(4);
  const FockState ghz = circuits::ghz({1, 2, 3, 4}, reg);
  for (auto r : {Resolving::PolarizationResolving, Resolving::NumberOnly}) {
    double total = 0.0;
    for (const auto& b : enumerate_outcomes(ghz, {1, 2}, r)) total += b.probability;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Outcomes, NumberOnlyKeepsDistinctRemaindersApart) {
  // Counting one photon in mode 1 of a GHZ state still leaves HH or VV behind.
  auto reg = fock::make_registry(3);
  const auto outcomes = enumerate_outcomes(circuits::ghz({1, 2, 3}, reg), {1}, Resolving::NumberOnly);
  ASSERT_EQ(outcomes.size(), 2u);
  for (const auto& b : outcomes) {
    EXPECT_EQ(to_string(b.pattern), "1=1");
    EXPECT_NEAR(b.probability, 0.5, 1e-12);
    EXPECT_EQ(b.post_state->size(), 1u);
  }
  EXPECT_THROW(post_select(circuits::ghz({1, 2, 3}, reg), outcomes[0].pattern), Error);
}

TEST(Outcomes, NumberOnlyMergesEqualRemainders) {
  auto reg = fock::make_registry(2);
  const FockState s = fock::normalize(
      FockState(reg, {{OccupationVector({H(1), H(2)}), 1.0}, {OccupationVector({V(1), H(2)}), 1.0}}));
  const auto outcomes = enumerate_outcomes(s, {1}, Resolving::NumberOnly);
  ASSERT_EQ(outcomes.size(), 1u);
  EXPECT_NEAR(outcomes[0].probability, 1.0, 1e-12);
}

TEST(Outcomes, PostSelectRemovesMeasuredModes) {
  auto reg = fock::make_registry(2);
  const FockState bell = circuits::bell_phi_plus(1, 2, reg);
  const auto b = post_select(bell, pattern({{1, {1, 1, 0}}}));
  EXPECT_NEAR(b.probability, 0.5, 1e-12);
  ASSERT_TRUE(b.post_state);
  EXPECT_FALSE(b.post_state->registry().contains_spatial(1));
  EXPECT_NEAR(std::abs(b.post_state->amplitude(OccupationVector({H(2)}))), 1.0, 1e-12);
  EXPECT_EQ(post_select(bell, pattern({{1, {2, 2, 0}}})).probability, 0.0);
}

TEST(Kraus, FilterCoefficients) {
  auto reg = fock::make_registry(3);
  const auto op = qf_operator(1, 2);
  const auto amp = [&](std::vector<fock::ModeId> in) {
    const FockState s(reg, {{OccupationVector(in), 1.0}});
    return apply_kraus_raw(s, op).amplitude(OccupationVector(in)).real();
  };
  EXPECT_DOUBLE_EQ(amp({H(1), H(2)}), 0.25);
  EXPECT_DOUBLE_EQ(amp({V(1), V(2)}), 0.25);
  EXPECT_DOUBLE_EQ(amp({V(2)}), 0.25);
  EXPECT_DOUBLE_EQ(amp({V(1)}), 0.5);
  EXPECT_DOUBLE_EQ(amp({}), 0.5);
  EXPECT_DOUBLE_EQ(amp({H(1), V(2)}), 0.0);
  EXPECT_NEAR(op.max_singular_value(), 0.5, 1e-12);
  EXPECT_NEAR(mqf_operator(1, 2).max_singular_value(), 0.25, 1e-12);
  EXPECT_THROW(qf_operator(2, 2), Error);
}

TEST(Kraus, ModifiedFilterOnBellPairs) {
  auto reg = fock::make_registry(4);
  const FockState pairs =
      fock::rehome(fock::tensor(circuits::bell_phi_plus(1, 2, fock::share(fock::Registry::from_spatial({1, 2}))),
                                circuits::bell_phi_plus(3, 4, fock::share(fock::Registry::from_spatial({3, 4})))),
                   reg);
  const auto b = apply_kraus(pairs, mqf_operator(2, 3));
  EXPECT_NEAR(b.probability, 1.0 / 128, 1e-12);
  EXPECT_NEAR(std::norm(fock::inner_product(circuits::ghz({1, 2, 3, 4}, reg), *b.post_state)), 1.0, 1e-12);
}

TEST(Fusion, TypeOneSucceedsHalfTheTime) {
  auto reg = fock::make_registry(4);
  const FockState pairs =
      fock::rehome(fock::tensor(circuits::bell_phi_plus(1, 2, fock::share(fock::Registry::from_spatial({1, 2}))),
                                circuits::bell_phi_plus(3, 4, fock::share(fock::Registry::from_spatial({3, 4})))),
                   reg);
  double p1 = 0.0;
  for (const auto& b : fusion_type1(pairs, 2, 3))
    if (b.success) p1 += b.outcome.probability;
  EXPECT_NEAR(p1, 0.5, 1e-12);
}

// Only one-H-one-V double clicks count; the same-polarization double clicks
// are reported as failures even though they leave an entangled pair.
TEST(Fusion, TypeTwoBranches) {
  auto reg = fock::make_registry(4);
  const FockState pairs =
      fock::rehome(fock::tensor(circuits::bell_phi_plus(1, 2, fock::share(fock::Registry::from_spatial({1, 2}))),
                                circuits::bell_phi_plus(3, 4, fock::share(fock::Registry::from_spatial({3, 4})))),
                   reg);
  double success = 0.0;
  double total = 0.0;
  const auto branches = fusion_type2(pairs, 2, 3);
  EXPECT_EQ(branches.size(), 8u);
  for (const auto& b : branches) {
    total += b.outcome.probability;
    if (b.success) success += b.outcome.probability;
    const bool same_pol_double = b.outcome.pattern.at(2).total == 1 && b.outcome.pattern.at(3).total == 1 &&
                                 b.outcome.pattern.total_h() != 1;
    if (same_pol_double) EXPECT_FALSE(b.success) << to_string(b.outcome.pattern);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(success, 0.25, 1e-12);
}

}  // namespace
}  // namespace quadsim::detection
