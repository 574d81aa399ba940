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

#include <algorithm>
#include <cmath>

#include "quadsim/analysis/protocol.hpp"
#include "quadsim/circuits/catalogue.hpp"
#include "quadsim/circuits/correction.hpp"
#include "quadsim/circuits/states.hpp"
#include "quadsim/error.hpp"

namespace quadsim::circuits {
namespace {

using fock::FockState;
using fock::H;
using fock::V;

TEST(States, NamedStatesAreNormalized) {
  auto reg = fock::make_registry(12);
  const QuadbitCodec a{1, 2}, b{3, 4}, c{5, 6}, d{7, 8};
  const std::vector<std::pair<FockState, int>> states = {
      {bell_phi_plus(1, 2, reg), 2},     {bell_psi_plus(1, 2, reg), 2},        {bell_phi_minus(1, 2, reg), 2},
      {ghz({1, 2, 3}, reg), 3},          {hes(1, 2, 3, 4, reg), 2},            {qdc2(a, b, reg), 2},
      {qdc3(a, b, c, reg), 3},           {qdc3_prime(a, b, c, reg), 3},        {qdc3_redundant(a, b, c, d, reg), 4},
      {qdc4_star(a, b, c, d, reg), 4},   {qdc4_prime(a, b, c, d, reg), 4}};
  for (const auto& [s, n] : states) {
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    EXPECT_EQ(s.photon_number(), n);
  }
}

TEST(States, CodecRoundTrip) {
  auto reg = fock::make_registry(4);
  const QuadbitCodec codec{3, 1};
  for (int k = 0; k < 4; ++k) {
    const auto v = codec.decode(codec.encode(k, reg));
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(v(j)), j == k ? 1.0 : 0.0, 1e-15);
  }
  EXPECT_EQ(codec.levels()[1], V(3));
  EXPECT_EQ(codec.levels()[2], H(1));
  EXPECT_THROW(codec.encode(4, reg), Error);
  EXPECT_THROW(codec.decode(hes(1, 2, 3, 4, reg)), Error);
}

TEST(States, ClusterStatesAreMaximallyEntangledAcrossTheCentre) {
  auto reg = fock::make_registry(6);
  const auto rep = analysis::entanglement_report(qdc2(QuadbitCodec{1, 2}, QuadbitCodec{3, 4}, reg), {1, 2});
  EXPECT_EQ(rep.rank, 4);
  for (double c : rep.coefficients) EXPECT_NEAR(c, 0.5, 1e-12);
  const auto hes_rep = analysis::entanglement_report(hes(1, 2, 3, 4, reg), {1, 2});
  EXPECT_EQ(hes_rep.rank, 4);
}

TEST(States, QuadbitFourierIsUnitary) {
  const Eigen::Matrix4cd f = quadbit_fourier();
  EXPECT_LT((f.adjoint() * f - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Correction, FindsLeafFourierWord) {
  auto reg = fock::make_registry(6);
  const FockState prime = qdc3_prime(QuadbitCodec{1, 2}, QuadbitCodec{3, 4}, QuadbitCodec{5, 6}, reg);
  const auto c = find_correction(prime, TargetSpec{TargetFamily::Qdc3, {1, 2, 3, 4, 5, 6}});
  ASSERT_TRUE(c.found);
  EXPECT_NEAR(c.fidelity, 1.0, 1e-9);
  EXPECT_NEAR(fidelity(prime, target_state(c.matched, reg), c.elements), 1.0, 1e-9);
}

TEST(Correction, IdentityWhenAlreadyOnTarget) {
  auto reg = fock::make_registry(2);
  const auto c = find_correction(bell_phi_plus(1, 2, reg), TargetSpec{TargetFamily::Bell, {1, 2}});
  EXPECT_TRUE(c.found);
  EXPECT_TRUE(c.elements.empty());
}

TEST(Correction, PhaseFlipIsRepaired) {
  auto reg = fock::make_registry(2);
  const auto c = find_correction(bell_phi_minus(1, 2, reg), TargetSpec{TargetFamily::Bell, {1, 2}});
  ASSERT_TRUE(c.found);
  EXPECT_EQ(c.elements.size(), 1u);
}

TEST(Correction, ProductStateIsNotCorrectable) {
  auto reg = fock::make_registry(2);
  const FockState hh(reg, {{fock::OccupationVector({H(1), H(2)}), 1.0}});
  const auto c = find_correction(hh, TargetSpec{TargetFamily::Bell, {1, 2}});
  EXPECT_FALSE(c.found);
  EXPECT_NEAR(c.fidelity, 0.5, 1e-12);
}

TEST(Correction, PhotonNumberMismatchGivesZero) {
  auto reg = fock::make_registry(4);
  const auto r = fidelity_report(bell_phi_plus(1, 2, reg), ghz({1, 2, 3}, reg));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(Correction, HesAnyTriesEveryPairing) {
  EXPECT_EQ(target_candidates(TargetSpec{TargetFamily::HesAny, {1, 2, 3, 4}}).size(), 3u);
  EXPECT_EQ(target_candidates(TargetSpec{TargetFamily::Hes, {1, 2, 3, 4}}).size(), 1u);
}

TEST(Correction, CacheReturnsStoredResult) {
  auto reg = fock::make_registry(2);
  CorrectionCache cache;
  const TargetSpec t{TargetFamily::Bell, {1, 2}};
  const auto first = find_correction(bell_phi_minus(1, 2, reg), t, 3, &cache);
  const auto second = find_correction(bell_phi_minus(1, 2, reg), t, 3, &cache);
  EXPECT_EQ(first.elements, second.elements);
}

TEST(Circuit, ValidateRejectsBadModes) {
  Circuit c = build_t3();
  c.steps.push_back({optics::beam_splitter(0.5, 1, 42)});
  EXPECT_THROW(validate(c), Error);

  Circuit twice = build_t3();
  twice.steps.push_back({optics::rotator(0.1, 3)});
  try {
    validate(twice);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Mode);
  }

  Circuit arity = build_t3();
  arity.target = TargetSpec{TargetFamily::Hes, {1, 7}};
  EXPECT_THROW(validate(arity), Error);
}

TEST(Circuit, InitialStateCarriesEveryInputPhoton) {
  for (const auto& name : catalogue_names()) {
    const Circuit c = builtin_circuit(name);
    EXPECT_EQ(initial_state(c).photon_number(), input_photons(c)) << name;
  }
}

TEST(Catalogue, ExposesRequiredNames) {
  const auto names = catalogue_names();
  for (const char* n : {"J1", "J2:bell2", "J2:ghz4", "J2:sp8", "K1", "K2", "K3:hes2:none", "K3:qdc3:ex3", "T3", "B",
                        "B:nocorrection", "GHZ3:ballistic", "GHZ4:ballistic", "BELL:sp4"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  try {
    builtin_circuit("K9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Configuration);
  }
}

struct Expectation {
  const char* name;
  double success;
};

void PrintTo(const Expectation& e, std::ostream* os) { *os << e.name; }

class CatalogueProbability : public ::testing::TestWithParam<Expectation> {};

TEST_P(CatalogueProbability, MatchesReference) {
  const auto r = analysis::run_protocol(builtin_circuit(GetParam().name));
  EXPECT_NEAR(r.success_probability, GetParam().success, 1e-9);
  EXPECT_NEAR(r.total_probability(), 1.0, 1e-9);
  if (auto f = r.min_success_fidelity()) EXPECT_NEAR(*f, 1.0, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(
    Builtins, CatalogueProbability,
    ::testing::Values(Expectation{"T3", 0.5}, Expectation{"J2:bell2", 1.0 / 16}, Expectation{"J2:sp8", 1.0 / 4096},
                      Expectation{"K1", 1.0 / 256}, Expectation{"K2", 1.0 / 1024},
                      Expectation{"K1:hes+qdc3", 1.0 / 256}, Expectation{"B", 0.25},
                      Expectation{"B:nocorrection", 3.0 / 16}, Expectation{"GHZ3:ballistic", 1.0 / 32},
                      Expectation{"GHZ4:ballistic", 1.0 / 128}, Expectation{"TYPE1:bell+bell", 0.5},
                      Expectation{"TYPE1:bell+ghz3", 0.5}, Expectation{"QF:bell2", 1.0 / 32},
                      Expectation{"MQF:bell2", 1.0 / 128}, Expectation{"K3:hes2:ex2", 1.0 / 32},
                      Expectation{"K3:hes2:ex3", 1.0 / 16}, Expectation{"K3:hes2:none", 0.0}),
    [](const auto& info) {
      std::string n = info.param.name;
      std::replace_if(n.begin(), n.end(), [](char ch) { return !std::isalnum(static_cast<unsigned char>(ch)); }, '_');
      return n;
    });

TEST(Catalogue, NumberOnlyGhzSourceHeraldsAMixture) {
  const auto r = analysis::run_protocol(builtin_circuit("J2:ghz4"));
  EXPECT_NEAR(r.success_probability, 3.0 / 16, 1e-9);
  for (const auto& b : r.branches)
    if (b.cls == analysis::BranchClass::Success) EXPECT_LE(*b.fidelity, 0.5 + 1e-9) << b.label();
}

TEST(Catalogue, SingleAncillaFusionFallsShortOfTheClaim) {
  const auto r = analysis::run_protocol(builtin_circuit("K3:hes2:ex1"));
  EXPECT_NEAR(r.success_probability, 3.0 / 128, 1e-9);
}

}  // namespace
}  // namespace quadsim::circuits
