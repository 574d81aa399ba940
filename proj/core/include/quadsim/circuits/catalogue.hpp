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

#include <string>
#include <vector>

#include "quadsim/circuits/circuit.hpp"

namespace quadsim::circuits {

enum class J2Source { Bell2, Ghz4, SinglePhotons8 };
enum class K3Inputs { Hes2, Qdc3 };
enum class K3Ancilla { None, TwoSingles, BellPair, Hes };
enum class Type1Inputs { BellBell, BellGhz3 };

// Bell pair into three beam splitters with two vacuum ports.
Circuit build_j1();
// Two J1 blocks joined by beam splitters on the primed outputs.
Circuit build_j2(J2Source source);
// Two HESs fused on modes 3 and 5 by the modified filter.
Circuit build_k1();
// K1 with the second HES replaced by a three-photon cluster.
Circuit build_k1_hes_qdc3();
// Two HESs fused by the modified filter followed by the full filter.
Circuit build_k2();
// Quadbit fusion by two T3 gates, with an optional ancilla.
Circuit build_k3(K3Inputs inputs, K3Ancilla ancilla);
Circuit build_t3();
// Bell pair from four single photons.
Circuit build_b(bool with_correction);
// GHZ state of `photons` (3 or 4) from 2 * photons single photons.
Circuit build_ghz_ballistic(int photons);
Circuit build_type1(Type1Inputs inputs);
// Filters applied to two Bell pairs across modes 2 and 3.
Circuit build_filter_demo(bool modified);

std::vector<std::string> catalogue_names();
// Throws Error(Configuration) for unknown names.
Circuit builtin_circuit(const std::string& name);

}  // namespace quadsim::circuits
