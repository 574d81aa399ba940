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

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "quadsim/fock/state.hpp"

namespace quadsim::circuits {

using fock::FockState;
using fock::ModeId;
using fock::RegistryPtr;

// One photon spread over two spatial modes: levels 0..3 are
// H on the first mode, V on the first, H on the second, V on the second.
struct QuadbitCodec {
  int first = 0;
  int second = 0;

  std::array<ModeId, 4> levels() const;
  FockState encode(int level, RegistryPtr registry) const;
  // Requires exactly one photon, carried by the codec's modes.
  Eigen::Vector4cd decode(const FockState& state) const;
};

// Maps |k> to |+_k> = (1/2) sum_j exp(i j k pi/2) |j>.
Eigen::Matrix4cd quadbit_fourier();

// A single photon in a linear combination of modes.
struct PhotonAmplitudes {
  std::vector<std::pair<ModeId, fock::Amplitude>> components;
};

// prod_p (sum_k c_pk a_k^dagger) |0>, for photons on pairwise distinct modes.
FockState photon_product(const std::vector<PhotonAmplitudes>& photons, RegistryPtr registry);
// sum_t weight_t * photon_product(photons_t).
FockState photon_superposition(const std::vector<std::pair<fock::Amplitude, std::vector<PhotonAmplitudes>>>& terms,
                               RegistryPtr registry);

PhotonAmplitudes quadbit_photon(const QuadbitCodec& codec, const Eigen::Vector4cd& logical);
PhotonAmplitudes quadbit_level(const QuadbitCodec& codec, int level);
PhotonAmplitudes quadbit_plus(const QuadbitCodec& codec, int level);

// (|HH> + |VV>)/sqrt2, (|HV> + |VH>)/sqrt2, (|HH> - |VV>)/sqrt2.
FockState bell_phi_plus(int a, int b, RegistryPtr registry);
FockState bell_psi_plus(int a, int b, RegistryPtr registry);
FockState bell_phi_minus(int a, int b, RegistryPtr registry);
// (|H...H> + |V...V>)/sqrt2, one photon per listed mode.
FockState ghz(const std::vector<int>& modes, RegistryPtr registry);
// (1/2)(|H>_a1|H>_b1 + |V>_a1|V>_b1 + |H>_a2|H>_b2 + |V>_a2|V>_b2).
FockState hes(int a1, int a2, int b1, int b2, RegistryPtr registry);
// (1/2) sum_i |i>|+_i>.
FockState qdc2(const QuadbitCodec& a, const QuadbitCodec& b, RegistryPtr registry);
// Linear three-photon cluster (1/2) sum_i |+_i>|i>|+_i>.
FockState qdc3(const QuadbitCodec& a, const QuadbitCodec& b, const QuadbitCodec& c, RegistryPtr registry);
// Four-photon form with the middle quadbit carried twice: (1/2) sum_i |+_i>|i i>|+_i>.
FockState qdc3_redundant(const QuadbitCodec& a, const QuadbitCodec& b1, const QuadbitCodec& b2,
                         const QuadbitCodec& c, RegistryPtr registry);
// (1/2)(|000> - |111> + |222> - |333>).
FockState qdc3_prime(const QuadbitCodec& a, const QuadbitCodec& b, const QuadbitCodec& c, RegistryPtr registry);
// Star with the second photon at the centre: (1/2) sum_d |+_d>|d>|+_d>|+_d>.
FockState qdc4_star(const QuadbitCodec& a, const QuadbitCodec& b, const QuadbitCodec& c, const QuadbitCodec& d,
                    RegistryPtr registry);
// (1/2) sum_d |dddd>.
FockState qdc4_prime(const QuadbitCodec& a, const QuadbitCodec& b, const QuadbitCodec& c, const QuadbitCodec& d,
                     RegistryPtr registry);

}  // namespace quadsim::circuits
