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
#include <string_view>
#include <vector>

#include "quadsim/circuits/circuit.hpp"

namespace quadsim::dsl {

enum class Severity { Error, Warning };

struct Diagnostic {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string message;
  Severity severity = Severity::Error;
};

// "file:3:7: error: message" when a file name is given.
std::string to_string(const Diagnostic& d, const std::string& file = {});

struct ParseResult {
  std::optional<circuits::Circuit> circuit;  // set when no errors occurred
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return circuit.has_value(); }
};

// Line-oriented circuit language; see README for the statement list.
ParseResult parse(std::string_view text);

// Inverse of parse on well-formed circuits.
std::string print(const circuits::Circuit& circuit);

// Angle literals: pi, -pi/4, 3pi/4, 3*pi/4, 2/3, decimals.
std::optional<double> parse_angle(std::string_view token);
// Real literals: p/q fractions and decimals.
std::optional<double> parse_real(std::string_view token);
// Multiples of pi with small denominators print exactly, others as decimals.
std::string format_angle(double radians);
std::string format_real(double x);

// "3", "3'" or "103" with an optional trailing H or V.
struct ModeToken {
  int spatial = 0;
  std::optional<fock::Pol> pol;
};
std::optional<ModeToken> parse_mode(std::string_view token);
std::string format_mode(int spatial);

std::optional<detection::Predicate> parse_predicate(std::string_view text, std::string* error = nullptr);
std::optional<detection::PatternLiteral> parse_literal(std::string_view text, std::string* error = nullptr);

}  // namespace quadsim::dsl
