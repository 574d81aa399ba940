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
#include <string>
#include <vector>

namespace quadsim::tools {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

// One entry per acceptance criterion, in order.
std::vector<CriterionResult> run_acceptance();
// "[PASS] 3 filters: detail"
std::string format_line(const CriterionResult& r);

// One random DSL line drawn from the statement vocabulary.
std::string random_line(std::mt19937& rng);

}  // namespace quadsim::tools
