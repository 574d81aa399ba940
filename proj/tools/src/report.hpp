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

#include <json.hpp>

#include "quadsim/analysis/protocol.hpp"

namespace quadsim::tools {

// Rounds to 12 significant digits.
double round12(double x);
std::string format12(double x);

nlohmann::json dump_json(const fock::FockState& state);
nlohmann::json result_json(const analysis::ProtocolResult& result, bool full_branches);
std::string result_csv(const analysis::ProtocolResult& result);
std::string table1_csv(const std::vector<analysis::ResourceRow>& rows);

}  // namespace quadsim::tools
