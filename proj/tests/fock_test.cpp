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

#include "quadsim/error.hpp"
#include "quadsim/fock/mode.hpp"
#include "quadsim/fock/state.hpp"

namespace quadsim::fock {
namespace {

TEST(Mode, PrimedLabels) {
  EXPECT_EQ(spatial_label(3), "3");
  EXPECT_EQ(spatial_label(primed(3)), "3'");
  EXPECT_EQ(to_string(V(primed(2))), "2'V");
  EXPECT_TRUE(is_primed(primed(1)));
  EXPECT_FALSE(is_primed(7));
}

TEST(Mode, RegistryContents) {
  auto reg = make_registry(2, 1);
  EXPECT_EQ(reg->size(), 6u);
  EXPECT_TRUE(reg->contains(H(primed(1))));
  EXPECT_FALSE(reg->contains_spatial(3));
  const Registry rest = reg->without_spatial({1});
  EXPECT_EQ(rest.spatial_modes(), (std::vector<int>{2, primed(1)}));
}

TEST(Occupation, SortedMultiset) {
  OccupationVector a({V(4), H(1), H(1)});
  EXPECT_EQ(a.total(), 3);
  EXPECT_EQ(a.count(H(1)), 2);
  EXPECT_EQ(a.count_spatial(4), 1);
  EXPECT_EQ(a, OccupationVector::from_counts({{H(1), 2}, {V(4), 1}}));
  EXPECT_DOUBLE_EQ(a.sqrt_factorials(), std::sqrt(2.0));
  EXPECT_EQ(a.with_removed(H(1)).count(H(1)), 1);
}

TEST(State, CreationIsBosonic) {
  auto reg = make_registry(1);
  FockState s = create(create(FockState::vacuum(reg), H(1)), H(1));
  EXPECT_NEAR(std::abs(s.amplitude(OccupationVector({H(1), H(1)}))), std::sqrt(2.0), 1e-15);
  FockState back = annihilate(s, H(1));
  EXPECT_NEAR(std::abs(back.amplitude(OccupationVector({H(1)}))), 2.0, 1e-15);
  EXPECT_TRUE(annihilate(FockState::vacuum(reg), V(1)).empty());
}

TEST(State, MergesDuplicatesAndPrunes) {
  auto reg = make_registry(2);
  FockState s(reg, {{OccupationVector({H(1)}), 0.5}, {OccupationVector({H(1)}), 0.5}, {OccupationVector({V(2)}), 1e-14}});
  EXPECT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(s.amplitude(OccupationVector({H(1)})).real(), 1.0);
}

TEST(State, RejectsForeignModes) {
  auto reg = make_registry(1);
  EXPECT_THROW(FockState(reg, {{OccupationVector({H(2)}), 1.0}}), Error);
  EXPECT_THROW(create(FockState::vacuum(reg), V(5)), Error);
}

TEST(State, InnerProductNeedsSameRegistry) {
  auto a = make_registry(2);
  auto b = make_registry(3);
  EXPECT_THROW(inner_product(FockState::vacuum(a), FockState::vacuum(b)), Error);
  // Equal registries behind different pointers are accepted.
  EXPECT_NEAR(inner_product(FockState::vacuum(a), FockState::vacuum(make_registry(2))).real(), 1.0, 0);
}

TEST(State, NormalizeZeroThrows) {
  auto reg = make_registry(1);
  try {
    normalize(FockState::zero(reg));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateState);
  }
}

TEST(State, SuperposeAndScale) {
  auto reg = make_registry(2);
  FockState h(reg, {{OccupationVector({H(1)}), 1.0}});
  FockState v(reg, {{OccupationVector({V(2)}), 1.0}});
  FockState s = normalize(superpose({{1.0, h}, {Amplitude(0, 1), v}}));
  EXPECT_NEAR(norm(s), 1.0, 1e-15);
  EXPECT_NEAR(s.amplitude(OccupationVector({V(2)})).imag(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(s.photon_number(), 1);
}

TEST(State, TensorOfDisjointRegistries) {
  auto a = share(Registry::from_spatial({1}));
  auto b = share(Registry::from_spatial({2}));
  FockState x(a, {{OccupationVector({H(1)}), 1.0}});
  FockState y(b, {{OccupationVector({V(2)}), 1.0}});
  FockState t = tensor(x, y);
  EXPECT_EQ(t.registry().size(), 4u);
  EXPECT_EQ(t.amplitude(OccupationVector({H(1), V(2)})), Amplitude(1.0));
  EXPECT_THROW(tensor(x, x), Error);
}

TEST(State, RehomeAndDump) {
  auto small = share(Registry::from_spatial({1}));
  FockState x(small, {{OccupationVector({H(1), H(1)}), -0.5}});
  FockState y = rehome(x, make_registry(3));
  EXPECT_EQ(y.registry().size(), 6u);
  const auto records = dump(y);
  ASSERT_EQ(records.size(), 1u);
  ASSERT_EQ(records[0].occupations.size(), 1u);
  EXPECT_EQ(records[0].occupations[0].count, 2);
  EXPECT_EQ(records[0].occupations[0].pol, 'H');
  EXPECT_DOUBLE_EQ(records[0].re, -0.5);
  EXPECT_EQ(to_string(FockState::zero(small)), "0");
}

}  // namespace
}  // namespace quadsim::fock
