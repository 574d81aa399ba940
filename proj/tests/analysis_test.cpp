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

#include "quadsim/analysis/protocol.hpp"
#include "quadsim/circuits/catalogue.hpp"
#include "quadsim/circuits/states.hpp"
#include "quadsim/error.hpp"

namespace quadsim::analysis {
namespace {

TEST(Rational, RecoversSmallFractions) {
  EXPECT_EQ(nearest_rational(3.0 / 128), (Rational{3, 128}));
  EXPECT_EQ(nearest_rational(1.0 / 4096), (Rational{1, 4096}));
  EXPECT_EQ(nearest_rational(0.0), (Rational{0, 1}));
  EXPECT_EQ(to_string(Rational{1, 16}), "1/16");
  EXPECT_EQ(to_string(Rational{1, 1}), "1");
}

TEST(RetryAdjusted, DividesOutTheRecycledShare) {
  EXPECT_NEAR(retry_adjusted(1.0 / 16, 1.0 / 16), 1.0 / 15, 1e-15);
  EXPECT_EQ(retry_adjusted(0.5, 0.0), 0.5);
  EXPECT_THROW(retry_adjusted(0.1, 1.0), Error);
  EXPECT_THROW(retry_adjusted(0.6, 0.6), Error);
}

TEST(Entanglement, BellPairHasTwoEqualCoefficients) {
  auto reg = fock::make_registry(2);
  const auto r = entanglement_report(circuits::bell_phi_plus(1, 2, reg), {1});
  EXPECT_EQ(r.rank, 2);
  EXPECT_FALSE(r.product);
  ASSERT_EQ(r.coefficients.size(), 2u);
  EXPECT_NEAR(r.coefficients[0], std::sqrt(0.5), 1e-12);
}

TEST(Entanglement, ProductIsRankOne) {
  auto reg = fock::make_registry(2);
  const fock::FockState hv(reg, {{fock::OccupationVector({fock::H(1), fock::V(2)}), 1.0}});
  const auto r = entanglement_report(hv, {1});
  EXPECT_EQ(r.rank, 1);
  EXPECT_TRUE(r.product);
}

TEST(Entanglement, RejectsOneSidedSplit) {
  auto reg = fock::make_registry(2);
  try {
    entanglement_report(circuits::bell_phi_plus(1, 2, reg), {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Partition);
  }
}

TEST(Protocol, T3BranchesCarryLabelsAndClasses) {
  const auto r = run_protocol(circuits::build_t3());
  EXPECT_EQ(r.circuit, "T3");
  EXPECT_NEAR(r.total_probability(), 1.0, 1e-12);
  int success = 0;
  for (const auto& b : r.branches) {
    EXPECT_EQ(b.patterns.size(), 1u);
    EXPECT_NE(b.label(), "-");
    if (b.cls == BranchClass::Success) {
      ++success;
      EXPECT_NEAR(*b.fidelity, 1.0, 1e-9);
    }
  }
  EXPECT_GT(success, 0);
  EXPECT_NEAR(r.success_probability + r.recyclable_probability + r.failure_probability, 1.0, 1e-12);
}

TEST(Protocol, RecyclableVacuumBranch) {
  const auto r = run_protocol(circuits::build_j2(circuits::J2Source::Bell2));
  EXPECT_NEAR(r.recyclable_probability, 1.0 / 16, 1e-12);
  ASSERT_TRUE(r.retry_adjusted_probability);
  EXPECT_NEAR(*r.retry_adjusted_probability, 1.0 / 15, 1e-12);
}

TEST(Protocol, PhotonCapIsEnforced) {
  RunOptions o;
  o.photon_cap = 2;
  try {
    run_protocol(circuits::build_k1(), o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Resource);
  }
}

TEST(Protocol, CorrectionsCanBeSwitchedOff) {
  RunOptions o;
  o.corrections = false;
  const auto with = run_protocol(circuits::build_b(true));
  const auto without = run_protocol(circuits::build_b(true), o);
  EXPECT_NEAR(with.total_probability(), without.total_probability(), 1e-12);
  for (const auto& b : without.branches) EXPECT_TRUE(b.correction.empty());
}

TEST(ClassReport, AccountsForEveryBranch) {
  const auto c = circuits::build_t3();
  const auto rep = class_report(c, run_protocol(c));
  EXPECT_NEAR(rep.total, 1.0, 1e-12);
  double sum = rep.stateless;
  for (const auto& e : rep.entries) sum += e.probability;
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_NEAR(rep.accepted, 0.5, 1e-12);
}

}  // namespace
}  // namespace quadsim::analysis
