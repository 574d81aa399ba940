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

#include <gtest/gtest.h>

#include "quadsim/analysis/protocol.hpp"
#include "quadsim/circuits/catalogue.hpp"
#include "report.hpp"

namespace quadsim::tools {
namespace {

TEST(Report, Round12) {
  EXPECT_EQ(round12(0.1 + 0.2), 0.3);
  EXPECT_EQ(round12(0.0), 0.0);
  EXPECT_EQ(format12(0.0625), "0.0625");
}

TEST(Report, JsonFields) {
  const auto r = analysis::run_protocol(circuits::build_t3());
  const auto j = result_json(r, false);
  EXPECT_EQ(j["circuit"], "T3");
  EXPECT_EQ(j["success_probability"], 0.5);
  EXPECT_EQ(j["success_rational"], "1/2");
  EXPECT_EQ(j["fidelity"], 1.0);
  ASSERT_TRUE(j["branches"].is_array());
  EXPECT_EQ(j["branches"].size(), r.branches.size());
  EXPECT_FALSE(j["branches"][0].contains("state"));
  EXPECT_FALSE(j["output_state"].empty());
  EXPECT_TRUE(result_json(r, true)["branches"][0].contains("state"));
}

TEST(Report, DumpJsonListsOccupations) {
  auto reg = fock::make_registry(1);
  const fock::FockState s(reg, {{fock::OccupationVector({fock::H(1), fock::H(1)}), 1.0}});
  const auto j = dump_json(s);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["re"], 1.0);
  EXPECT_EQ(j[0]["im"], 0.0);
}

TEST(Report, CsvHeaders) {
  const auto r = analysis::run_protocol(circuits::build_t3());
  const std::string csv = result_csv(r);
  EXPECT_EQ(csv.rfind("patterns,probability,class,fidelity,note\n", 0), 0u);
  EXPECT_EQ(table1_csv({}), "resource_counts,output,paper_p,computed_p,pass\n");
}

}  // namespace
}  // namespace quadsim::tools
