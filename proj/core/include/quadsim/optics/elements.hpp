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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quadsim/fock/mode.hpp"
#include "quadsim/fock/state.hpp"

namespace quadsim::optics {

using fock::ModeId;
using fock::Pol;

// Column i holds the image of the creation operator on modes[i]:
// a_i^dagger -> sum_j matrix(j, i) a_j^dagger.
struct ModeUnitary {
  std::vector<ModeId> modes;
  Eigen::MatrixXcd matrix;

  double unitarity_defect() const;  // max |U^dagger U - I|
};

// Local matrices, indexed (m1H, m1V, m2H, m2V, ...).
Eigen::Matrix4cd bs_matrix(double r_sq);
Eigen::Matrix2cd rotator_matrix(double theta);
Eigen::Matrix4cd pbs_matrix();
Eigen::Matrix2cd phase_matrix(double phi);
Eigen::Matrix<std::complex<double>, 8, 8> four_port_matrix();
// |k> -> |+_k> = (1/2) sum_j i^(jk) |j> on the four levels of one photon.
Eigen::Matrix4cd quadbit_fourier_matrix();

enum class ElementKind {
  BeamSplitter,
  Rotator,
  PBS,
  Phase,
  FourPort,
  QuadbitFourier,
  InverseQuadbitFourier,
};

struct Element {
  ElementKind kind = ElementKind::BeamSplitter;
  // r_sq for a beam splitter, theta for a rotator, phi for a phase shifter.
  double param = 0.0;
  std::vector<int> spatial;
  // Phase shifters may act on a single polarization of their mode.
  std::optional<Pol> pol;

  std::vector<ModeId> acted_modes() const;
  ModeUnitary unitary() const;

  bool operator==(const Element&) const = default;
};

Element beam_splitter(double r_sq, int m1, int m2);
Element rotator(double theta, int m);
Element pbs(int m1, int m2);
Element phase(double phi, int m, std::optional<Pol> pol = std::nullopt);
Element four_port(int m1, int m2, int m3, int m4);
Element quadbit_fourier(int m1, int m2);
Element inverse_quadbit_fourier(int m1, int m2);

ModeUnitary bs_unitary(double r_sq, int m1, int m2);
ModeUnitary rotator_unitary(double theta, int m);
ModeUnitary pbs_unitary(int m1, int m2);
ModeUnitary phase_unitary(double phi, int m, std::optional<Pol> pol = std::nullopt);
ModeUnitary four_port_unitary(int m1, int m2, int m3, int m4);

std::string describe(const Element& element);

// Substitutes every creation operator on the acted modes by its image and
// expands the products multinomially.
fock::FockState apply(const fock::FockState& state, const ModeUnitary& unitary);
fock::FockState apply(const fock::FockState& state, const Element& element);
fock::FockState apply(const fock::FockState& state, const std::vector<Element>& elements);

}  // namespace quadsim::optics
