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

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace quadsim::detection {

enum class Resolving { NumberOnly, PolarizationResolving };

struct ModeCount {
  int total = 0;
  // Zero for number-only detectors.
  int h = 0;
  int v = 0;

  auto operator<=>(const ModeCount&) const = default;
};

// Outcome of one detection step. Every measured spatial mode is present,
// including the empty ones.
struct DetectionPattern {
  Resolving resolving = Resolving::PolarizationResolving;
  std::map<int, ModeCount> counts;

  int total() const;
  int total_h() const;
  int total_v() const;
  bool is_vacuum() const { return total() == 0; }
  ModeCount at(int spatial) const;

  bool operator==(const DetectionPattern&) const = default;
  bool operator<(const DetectionPattern& other) const;
};

// "2=H1,3=V1", "1'=1,4'=1" or "vacuum"; empty modes are omitted.
std::string to_string(const DetectionPattern& pattern);

// One alternative of an acceptance condition. Listed modes must match their
// counts; measured modes that are not listed must be empty.
struct CountSpec {
  std::optional<int> total;
  std::optional<int> h;
  std::optional<int> v;

  bool matches(const ModeCount& c, Resolving resolving) const;
  bool operator==(const CountSpec&) const = default;
};

struct PatternLiteral {
  std::map<int, CountSpec> entries;  // empty map means vacuum

  bool matches(const DetectionPattern& pattern) const;
  bool operator==(const PatternLiteral&) const = default;
};

std::string to_string(const PatternLiteral& literal);

enum class NamedPredicate {
  Any,
  Vacuum,
  OnePhoton,
  TwoPhotons,
  OneHOneV,
  // Exactly two photons and no detector (or polarization channel) fired twice.
  PairNoBunch,
};

std::optional<NamedPredicate> named_predicate_from_string(const std::string& name);
std::string to_string(NamedPredicate predicate);
std::vector<std::string> named_predicate_names();

struct Predicate {
  std::variant<NamedPredicate, std::vector<PatternLiteral>> rule = NamedPredicate::Any;

  bool matches(const DetectionPattern& pattern) const;
  bool operator==(const Predicate&) const = default;
};

std::string to_string(const Predicate& predicate);

}  // namespace quadsim::detection
