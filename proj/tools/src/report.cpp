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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "quadsim/dsl/dsl.hpp"
#include "quadsim/fock/state.hpp"

namespace quadsim::tools {

using nlohmann::json;

double round12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json dump_json(const fock::FockState& state) {
  json out = json::array();
  for (const auto& rec : fock::dump(state)) {
    json occ = json::array();
    for (const auto& o : rec.occupations) occ.push_back({o.spatial, std::string(1, o.pol), o.count});
    out.push_back({{"mode_occupations", occ}, {"re", round12(rec.re)}, {"im", round12(rec.im)}});
  }
  return out;
}

namespace {

json correction_json(const std::vector<optics::Element>& elements) {
  json out = json::array();
  for (const auto& e : elements) out.push_back(optics::describe(e));
  return out;
}

const analysis::Branch* representative(const analysis::ProtocolResult& result) {
  const analysis::Branch* best = nullptr;
  for (const auto& b : result.branches) {
    if (b.cls != analysis::BranchClass::Success || !b.state) continue;
    if (!best || b.probability > best->probability + 1e-15) best = &b;
  }
  return best;
}

}  // namespace

json result_json(const analysis::ProtocolResult& result, bool full_branches) {
  json j;
  j["circuit"] = result.circuit;
  j["success_probability"] = round12(result.success_probability);
  j["success_rational"] = analysis::to_string(analysis::nearest_rational(result.success_probability));
  j["recyclable_probability"] = round12(result.recyclable_probability);
  j["failure_probability"] = round12(result.failure_probability);
  j["total_probability"] = round12(result.total_probability());
  if (result.retry_adjusted_probability)
    j["retry_adjusted_probability"] = round12(*result.retry_adjusted_probability);
  const auto fid = result.min_success_fidelity();
  j["fidelity"] = fid ? json(round12(*fid)) : json(nullptr);
  json branches = json::array();
  for (const auto& b : result.branches) {
    json e;
    e["patterns"] = b.label();
    e["probability"] = round12(b.probability);
    e["rational"] = analysis::to_string(analysis::nearest_rational(b.probability));
    e["class"] = analysis::to_string(b.cls);
    e["note"] = b.note;
    if (!b.marks.empty()) e["marks"] = b.marks;
    if (b.fidelity) e["fidelity"] = round12(*b.fidelity);
    if (b.matched) e["target"] = circuits::to_string(*b.matched);
    if (!b.correction.empty()) e["correction"] = correction_json(b.correction);
    if (!b.schmidt.empty()) {
      json s = json::array();
      for (double x : b.schmidt) s.push_back(round12(x));
      e["schmidt"] = s;
    }
    if (full_branches && b.state) e["state"] = dump_json(*b.state);
    branches.push_back(std::move(e));
  }
  j["branches"] = std::move(branches);
  json output = json::array();
  if (const auto* rep = representative(result)) {
    const fock::FockState corrected = optics::apply(*rep->state, rep->correction);
    output = dump_json(corrected);
    j["output_branch"] = rep->label();
  }
  j["output_state"] = std::move(output);
  return j;
}

std::string result_csv(const analysis::ProtocolResult& result) {
  std::ostringstream os;
  os << "patterns,probability,class,fidelity,note\n";
  for (const auto& b : result.branches) {
    os << '"' << b.label() << "\"," << format12(b.probability) << ',' << analysis::to_string(b.cls) << ','
       << (b.fidelity ? format12(*b.fidelity) : std::string()) << ",\"" << b.note << "\"\n";
  }
  return os.str();
}

std::string table1_csv(const std::vector<analysis::ResourceRow>& rows) {
  std::ostringstream os;
  os << "resource_counts,output,paper_p,computed_p,pass\n";
  for (const auto& r : rows)
    os << r.resources << ',' << r.output << ',' << analysis::to_string(r.expected) << ',' << format12(r.computed) << ','
       << (r.pass ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace quadsim::tools
