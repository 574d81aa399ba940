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

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "quadsim/fock/state.hpp"
#include "quadsim/optics/elements.hpp"

namespace quadsim::tools {

// Permanent by direct expansion over permutations; for small matrices only.
std::complex<double> permanent(const Eigen::MatrixXcd& m);

// Reference for optics::apply: every output amplitude is a permanent of the
// row/column-repeated submatrix divided by sqrt(prod s! prod t!).
fock::FockState dense_apply(const fock::FockState& state, const optics::ModeUnitary& unitary);

// Normalized random superposition of `terms` occupations with `photons`
// photons over the registry.
fock::FockState random_state(fock::RegistryPtr registry, int photons, int terms, std::mt19937& rng);

// max |a_k - b_k| over the union of supports.
double max_difference(const fock::FockState& a, const fock::FockState& b);

}  // namespace quadsim::tools
