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

#include "oracle.hpp"
#include "quadsim/error.hpp"
#include "quadsim/optics/elements.hpp"

namespace quadsim::optics {
namespace {

using fock::FockState;
using fock::H;
using fock::OccupationVector;
using fock::V;

constexpr double kPi = std::numbers::pi;

FockState photons(fock::RegistryPtr reg, std::vector<fock::ModeId> modes) {
  return FockState(std::move(reg), {{OccupationVector(std::move(modes)), 1.0}});
}

TEST(Elements, BeamSplitterColumns) {
  auto reg = fock::make_registry(2);
  const FockState out = optics::apply(photons(reg, {H(1)}), beam_splitter(0.25, 1, 2));
  EXPECT_NEAR(out.amplitude(OccupationVector({H(1)})).real(), std::sqrt(0.75), 1e-15);
  EXPECT_NEAR(out.amplitude(OccupationVector({H(2)})).real(), 0.5, 1e-15);
  const FockState out2 = optics::apply(photons(reg, {V(2)}), beam_splitter(0.25, 1, 2));
  EXPECT_NEAR(out2.amplitude(OccupationVector({V(1)})).real(), -0.5, 1e-15);
}

TEST(Elements, FullReflectionIsSignedSwap) {
  auto reg = fock::make_registry(2);
  EXPECT_NEAR(optics::apply(photons(reg, {H(1)}), beam_splitter(1.0, 1, 2)).amplitude(OccupationVector({H(2)})).real(), 1.0,
              1e-15);
  EXPECT_NEAR(optics::apply(photons(reg, {H(2)}), beam_splitter(1.0, 1, 2)).amplitude(OccupationVector({H(1)})).real(), -1.0,
              1e-15);
}

TEST(Elements, RotatorAndPhase) {
  auto reg = fock::make_registry(1);
  const FockState r = optics::apply(photons(reg, {H(1)}), rotator(kPi / 6, 1));
  EXPECT_NEAR(r.amplitude(OccupationVector({H(1)})).real(), std::cos(kPi / 6), 1e-15);
  EXPECT_NEAR(r.amplitude(OccupationVector({V(1)})).real(), std::sin(kPi / 6), 1e-15);
  const FockState p = optics::apply(photons(reg, {V(1)}), phase(kPi / 2, 1, fock::Pol::V));
  EXPECT_NEAR(p.amplitude(OccupationVector({V(1)})).imag(), 1.0, 1e-15);
  const FockState q = optics::apply(photons(reg, {H(1)}), phase(kPi / 2, 1, fock::Pol::V));
  EXPECT_NEAR(q.amplitude(OccupationVector({H(1)})).real(), 1.0, 1e-15);
}

TEST(Elements, PbsRoutesVertical) {
  auto reg = fock::make_registry(2);
  EXPECT_NEAR(std::abs(optics::apply(photons(reg, {V(1)}), pbs(1, 2)).amplitude(OccupationVector({V(2)}))), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(optics::apply(photons(reg, {H(1)}), pbs(1, 2)).amplitude(OccupationVector({H(1)}))), 1.0, 1e-15);
}

TEST(Elements, FourPortEntries) {
  const auto m = four_port_matrix();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      const double a = std::abs(m(r, c));
      EXPECT_TRUE(std::abs(a) < 1e-15 || std::abs(a - 0.5) < 1e-15) << r << "," << c;
    }
}

TEST(Elements, QuadbitFourierEntries) {
  const auto f = quadbit_fourier_matrix();
  const std::complex<double> i(0, 1);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) EXPECT_LT(std::abs(f(j, k) - 0.5 * std::pow(i, j * k)), 1e-15);
  auto reg = fock::make_registry(2);
  const FockState s = optics::apply(photons(reg, {V(2)}), std::vector<Element>{quadbit_fourier(1, 2), inverse_quadbit_fourier(1, 2)});
  EXPECT_NEAR(std::abs(s.amplitude(OccupationVector({V(2)}))), 1.0, 1e-14);
}

TEST(Elements, HongOuMandel) {
  auto reg = fock::make_registry(2);
  const FockState bs = optics::apply(photons(reg, {H(1), H(2)}), beam_splitter(0.5, 1, 2));
  EXPECT_LT(std::abs(bs.amplitude(OccupationVector({H(1), H(2)}))), 1e-12);
  EXPECT_NEAR(std::norm(bs.amplitude(OccupationVector({H(1), H(1)}))), 0.5, 1e-12);
  const FockState rot = optics::apply(photons(reg, {H(1), V(1)}), rotator(kPi / 4, 1));
  EXPECT_LT(std::abs(rot.amplitude(OccupationVector({H(1), V(1)}))), 1e-12);
}

TEST(Elements, Unitarity) {
  for (const auto& e : {beam_splitter(0.3, 1, 2), rotator(1.2, 1), pbs(2, 3), phase(0.7, 1), four_port(1, 2, 3, 4),
                        quadbit_fourier(3, 4), inverse_quadbit_fourier(1, 2)})
    EXPECT_LT(e.unitary().unitarity_defect(), 1e-12) << describe(e);
}

TEST(Elements, RejectsBadParameters) {
  EXPECT_THROW(beam_splitter(1.5, 1, 2), Error);
  EXPECT_THROW(beam_splitter(0.5, 1, 1), Error);
  EXPECT_THROW(pbs(3, 3), Error);
  auto reg = fock::make_registry(2);
  EXPECT_THROW(optics::apply(photons(reg, {H(1)}), beam_splitter(0.5, 1, 7)), Error);
}

TEST(Elements, ApplyPreservesNormAndPhotonNumber) {
  std::mt19937 rng(7);
  auto reg = fock::make_registry(4);
  const std::vector<Element> network = {beam_splitter(0.5, 1, 2), rotator(0.4, 3), pbs(2, 3), four_port(1, 2, 3, 4),
                                        phase(1.0, 4, fock::Pol::H)};
  for (int rep = 0; rep < 10; ++rep) {
    const FockState s = tools::random_state(reg, 3, 6, rng);
    const FockState out = optics::apply(s, network);
    EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
    EXPECT_EQ(out.photon_number(), 3);
  }
}

struct OracleCase {
  Element element;
  int spatial;
};

class DenseOracle : public ::testing::TestWithParam<OracleCase> {};

TEST_P(DenseOracle, SparseApplyMatchesPermanents) {
  std::mt19937 rng(11);
  auto reg = fock::make_registry(GetParam().spatial);
  for (int n = 0; n <= 3; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const FockState s = tools::random_state(reg, n, 6, rng);
      const auto& e = GetParam().element;
      EXPECT_LT(tools::max_difference(optics::apply(s, e), tools::dense_apply(s, e.unitary())), 1e-10) << describe(e);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllElements, DenseOracle,
                         ::testing::Values(OracleCase{beam_splitter(0.5, 1, 2), 3},
                                           OracleCase{beam_splitter(2.0 / 3, 3, 1), 3},
                                           OracleCase{rotator(kPi / 4, 2), 3}, OracleCase{rotator(-0.9, 1), 3},
                                           OracleCase{pbs(1, 3), 3}, OracleCase{phase(kPi / 2, 2), 3},
                                           OracleCase{phase(2.0, 3, fock::Pol::V), 3},
                                           OracleCase{quadbit_fourier(1, 2), 3},
                                           OracleCase{inverse_quadbit_fourier(2, 3), 3},
                                           OracleCase{four_port(1, 2, 3, 4), 4}));

TEST(Oracle, PermanentOfSmallMatrices) {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 2, 3, 4;
  EXPECT_NEAR(tools::permanent(m).real(), 10.0, 1e-15);
  EXPECT_NEAR(tools::permanent(Eigen::MatrixXcd::Ones(3, 3)).real(), 6.0, 1e-15);
}

}  // namespace
}  // namespace quadsim::optics
