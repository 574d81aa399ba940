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
#include <variant>
#include <vector>

#include "quadsim/detection/pattern.hpp"
#include "quadsim/fock/state.hpp"
#include "quadsim/optics/elements.hpp"

namespace quadsim::circuits {

enum class SourceKind {
  Bell,           // Phi+ on two modes
  Ghz3,
  Ghz4,
  Hes,            // a1 a2 b1 b2
  SinglePhotons,  // one photon per listed mode, H unless stated
  Vacuum,         // declares empty modes
  QuadbitPlus,    // |+_level> on one photon over two modes
  PathBell,       // (|H>_a|H>_c + |H>_b|H>_d)/sqrt2 on a b c d
  Qdc3,           // linear three-photon cluster on six modes
  Qdc3Prime,
};

struct ModeRef {
  int spatial = 0;
  std::optional<fock::Pol> pol;

  bool operator==(const ModeRef&) const = default;
};

struct Source {
  SourceKind kind = SourceKind::Bell;
  std::vector<ModeRef> modes;
  int level = 0;  // QuadbitPlus only

  bool operator==(const Source&) const = default;
};

std::string to_string(SourceKind kind);
std::optional<SourceKind> source_kind_from_string(const std::string& name);
// Number of modes a source takes, or nullopt when variable.
std::optional<std::size_t> source_arity(SourceKind kind);

struct Step;

struct Arm {
  detection::PatternLiteral when;
  std::vector<Step> body;

  bool operator==(const Arm& other) const;
};

// Destructive detection. Patterns rejected by `accept` end as failures;
// the first arm whose literal matches runs before the following steps.
struct DetectStep {
  std::vector<int> modes;
  detection::Resolving resolving = detection::Resolving::PolarizationResolving;
  std::optional<detection::Predicate> accept;
  std::vector<Arm> arms;

  bool operator==(const DetectStep& other) const;
};

struct KrausStep {
  enum class Kind { QF, MQF };
  Kind kind = Kind::QF;
  int i = 0;
  int j = 0;

  bool operator==(const KrausStep&) const = default;
};

// Keeps the terms with exactly one photon in each listed mode.
struct PostselectStep {
  std::vector<int> modes;

  bool operator==(const PostselectStep&) const = default;
};

// Labels every branch passing through.
struct MarkStep {
  std::string label;

  bool operator==(const MarkStep&) const = default;
};

struct StopStep {
  bool operator==(const StopStep&) const = default;
};

struct Step {
  std::variant<optics::Element, DetectStep, KrausStep, PostselectStep, MarkStep, StopStep> op;

  bool operator==(const Step& other) const;
};

enum class TargetFamily {
  Bell,      // a b
  Bell2,     // a b c d: Phi+(a,b) Phi+(c,d)
  Ghz3,      // a b c
  Ghz4,      // a b c d
  Hes,       // a1 a2 b1 b2
  HesAny,    // four modes, any pairing into two photons
  Qdc3,      // three codecs, centre second
  Qdc3Prime,
  Qdc4,      // four codecs, star centre second
  Qdc4Prime,
};

std::string to_string(TargetFamily family);
std::optional<TargetFamily> target_family_from_string(const std::string& name);
std::size_t target_arity(TargetFamily family);

struct TargetSpec {
  TargetFamily family = TargetFamily::Bell;
  std::vector<int> modes;
  // Success branches that no dictionary correction brings to fidelity 1
  // are counted as failures.
  bool strict = false;

  bool operator==(const TargetSpec&) const = default;
};

std::string to_string(const TargetSpec& target);

struct Circuit {
  std::string name;
  std::string description;
  int modes = 0;   // spatial modes 1..modes
  int primed = 0;  // primed modes 1'..primed'
  std::vector<Source> inputs;
  std::vector<Step> steps;
  std::optional<TargetSpec> target;
  // Failure branches matching one of these are reported as recyclable.
  std::vector<TargetSpec> recycle;
  // Side A of the bipartition used for Schmidt reports.
  std::vector<int> split;

  bool operator==(const Circuit&) const = default;
};

fock::RegistryPtr circuit_registry(const Circuit& circuit);
fock::FockState source_state(const Source& source, fock::RegistryPtr registry);
fock::FockState initial_state(const Circuit& circuit);

// Checks mode declarations and that no step touches an already detected mode.
// Throws Error(Configuration) or Error(Mode).
void validate(const Circuit& circuit);

// Number of photons supplied by the inputs.
int input_photons(const Circuit& circuit);

}  // namespace quadsim::circuits
