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
#include <utility>
#include <vector>

#include "quadsim/detection/pattern.hpp"
#include "quadsim/fock/state.hpp"

namespace quadsim::detection {

struct OutcomeBranch {
  DetectionPattern pattern;
  double probability = 0.0;
  // Normalized; empty when the probability is below 1e-15.
  std::optional<fock::FockState> post_state;
};

// Unnormalized component of a state that produced a given pattern, with the
// measured modes removed from its registry. A number-only pattern can leave a
// mixture; each pure component is then its own RawBranch under the same
// pattern, with components on the same ray merged.
struct RawBranch {
  DetectionPattern pattern;
  fock::FockState substate;
};

inline constexpr double kZeroProbability = 1e-15;

std::vector<RawBranch> split_by_pattern(const fock::FockState& state, const std::vector<int>& measured,
                                        Resolving resolving);

// Canonically ordered; zero-probability branches are dropped. Number-only
// patterns may repeat, one entry per pure component.
std::vector<OutcomeBranch> enumerate_outcomes(const fock::FockState& state, const std::vector<int>& measured,
                                              Resolving resolving);

// Throws Precondition if the pattern leaves a mixture of distinct states.
OutcomeBranch post_select(const fock::FockState& state, const DetectionPattern& pattern);

struct KrausTerm {
  fock::OccupationVector in;
  fock::OccupationVector out;
  fock::Amplitude coefficient;
};

// Sub-normalized operator on the four polarization modes of two spatial modes.
// Inputs without a matching term are annihilated.
struct MeasurementOperator {
  std::string name;
  std::vector<int> spatial;
  std::vector<KrausTerm> terms;

  double max_singular_value() const;
};

MeasurementOperator qf_operator(int i, int j);
MeasurementOperator mqf_operator(int i, int j);

fock::FockState apply_kraus_raw(const fock::FockState& state, const MeasurementOperator& op);
OutcomeBranch apply_kraus(const fock::FockState& state, const MeasurementOperator& op);

struct FusionBranch {
  OutcomeBranch outcome;
  bool success = false;
};

// PBS, R(pi/4) on m_b, polarization-resolved detection of m_b; succeeds on
// exactly one detected photon.
std::vector<FusionBranch> fusion_type1(const fock::FockState& state, int m_a, int m_b);
// PBS, R(pi/4) on both outputs, both detected; succeeds on one H and one V.
std::vector<FusionBranch> fusion_type2(const fock::FockState& state, int m_a, int m_b);

}  // namespace quadsim::detection
