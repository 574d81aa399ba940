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

#include <map>
#include <string>
#include <vector>

#include "quadsim/circuits/circuit.hpp"
#include "quadsim/fock/state.hpp"
#include "quadsim/optics/elements.hpp"

namespace quadsim::circuits {

// Target state on the given registry. Hes stands for HesAny's first pairing.
fock::FockState target_state(const TargetSpec& target, fock::RegistryPtr registry);

// Concrete targets tried: HesAny expands into its three pairings.
std::vector<TargetSpec> target_candidates(const TargetSpec& target);

// Generators of the finite correction dictionary for a target family.
std::vector<optics::Element> correction_dictionary(const TargetSpec& target);

// |<target|U psi>|^2 / (|target|^2 |psi|^2) with U the corrections in order.
// Registries may differ; terms are matched by occupation.
struct FidelityReport {
  double value = 0.0;
  std::string diagnostic;  // set when the value is forced to zero
};

FidelityReport fidelity_report(const fock::FockState& state, const fock::FockState& target,
                               const std::vector<optics::Element>& corrections = {});
double fidelity(const fock::FockState& state, const fock::FockState& target,
                const std::vector<optics::Element>& corrections = {});

struct Correction {
  bool found = false;
  // Fidelity after `elements` (1 when found); without a correction, the
  // uncorrected fidelity.
  double fidelity = 0.0;
  std::vector<optics::Element> elements;
  TargetSpec matched;
};

// Remembers searches so repeated branch states cost one lookup. Not
// thread-safe; use one cache per thread.
class CorrectionCache {
 public:
  const Correction* find(const std::string& key) const;
  void store(const std::string& key, Correction correction);
  // Words that succeeded before for states of the same shape.
  const std::vector<std::vector<optics::Element>>& hints(const std::string& shape) const;
  void add_hint(const std::string& shape, std::vector<optics::Element> word);

 private:
  std::map<std::string, Correction> results_;
  std::map<std::string, std::vector<std::vector<optics::Element>>> hints_;
};

// Searches words of length <= max_length over the dictionary, each followed
// by per-mode phases in multiples of pi/2 solved exactly.
Correction find_correction(const fock::FockState& state, const TargetSpec& target, int max_length = 3,
                           CorrectionCache* cache = nullptr);

}  // namespace quadsim::circuits
