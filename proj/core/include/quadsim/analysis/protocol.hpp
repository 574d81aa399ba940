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

#include "quadsim/circuits/circuit.hpp"
#include "quadsim/detection/pattern.hpp"
#include "quadsim/fock/state.hpp"
#include "quadsim/optics/elements.hpp"

namespace quadsim::analysis {

enum class BranchClass { Success, Recyclable, Failure };

std::string to_string(BranchClass cls);

struct Rational {
  long numerator = 0;
  long denominator = 1;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  bool operator==(const Rational&) const = default;
};

// Last continued-fraction convergent with denominator <= max_denominator.
Rational nearest_rational(double x, long max_denominator = 4096);
std::string to_string(const Rational& r);

struct Branch {
  // One pattern per detection step on the path.
  std::vector<detection::DetectionPattern> patterns;
  std::vector<std::string> marks;
  double probability = 0.0;
  BranchClass cls = BranchClass::Failure;
  // Why the branch ended, e.g. "rejected at detection 2".
  std::string note;
  // Absent for filter and postselection rejections.
  std::optional<fock::FockState> state;
  std::optional<double> fidelity;
  std::vector<optics::Element> correction;
  std::optional<circuits::TargetSpec> matched;
  std::vector<double> schmidt;

  std::string label() const;
  bool has_mark(const std::string& mark) const;
};

struct ProtocolResult {
  std::string circuit;
  double success_probability = 0.0;
  double recyclable_probability = 0.0;
  double failure_probability = 0.0;
  std::optional<double> retry_adjusted_probability;
  std::vector<Branch> branches;

  double total_probability() const;
  // Lowest corrected fidelity over success branches, if a target is set.
  std::optional<double> min_success_fidelity() const;
};

struct RunOptions {
  // Photon-number guard; QUADSIM_PHOTON_CAP overrides the default.
  int photon_cap = 0;  // 0 means photon_cap_default()
  bool corrections = true;
  bool schmidt = true;
};

int photon_cap_default();

// Exhaustive evaluation of every detection branch. Throws Error(Resource)
// when the input exceeds the photon cap.
ProtocolResult run_protocol(const circuits::Circuit& circuit, const RunOptions& options = {});

// success / (1 - recyclable). Throws Error(Parameter) when recyclable >= 1.
double retry_adjusted(double success, double recyclable);

struct SchmidtReport {
  std::vector<double> coefficients;  // descending
  int rank = 0;
  bool product = false;
};

// Side A is a set of spatial modes; side B is the rest of the registry.
// Throws Error(Partition) when either side is empty.
SchmidtReport entanglement_report(const fock::FockState& state, const std::vector<int>& side_a);

// Groups branches that carry a state by acceptance, Schmidt rank and
// uncorrected fidelity with the circuit target.
struct ClassEntry {
  bool accepted = false;
  int schmidt_rank = 0;
  double fidelity = 0.0;
  double probability = 0.0;
  int branches = 0;
};

struct ClassReport {
  std::string circuit;
  std::vector<ClassEntry> entries;
  double total = 0.0;
  double accepted = 0.0;
  double entangled = 0.0;  // Schmidt rank >= 2
  double product = 0.0;
  double stateless = 0.0;
};

ClassReport class_report(const circuits::Circuit& circuit, const ProtocolResult& result);

struct ResourceRow {
  std::string resources;  // e.g. "2 BP"
  std::string output;
  Rational expected;
  std::string circuit;
  double computed = 0.0;
  bool pass = false;
};

std::vector<ResourceRow> reproduce_table1(const RunOptions& options = {});

}  // namespace quadsim::analysis
