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

#include <sstream>

#include "quadsim/dsl/dsl.hpp"

namespace quadsim::dsl {

using circuits::Step;

namespace {

std::string modes_text(const std::vector<int>& modes) {
  std::string out;
  for (int m : modes) out += " " + format_mode(m);
  return out;
}

std::string element_text(const optics::Element& e) {
  using optics::ElementKind;
  switch (e.kind) {
    case ElementKind::BeamSplitter: return "bs " + format_real(e.param) + modes_text(e.spatial);
    case ElementKind::Rotator: return "rot " + format_angle(e.param) + modes_text(e.spatial);
    case ElementKind::PBS: return "pbs" + modes_text(e.spatial);
    case ElementKind::Phase: {
      std::string out = "phase " + format_angle(e.param) + modes_text(e.spatial);
      if (e.pol) out += fock::to_char(*e.pol);
      return out;
    }
    case ElementKind::FourPort: return "fourport" + modes_text(e.spatial);
    case ElementKind::QuadbitFourier: return "qft" + modes_text(e.spatial);
    case ElementKind::InverseQuadbitFourier: return "iqft" + modes_text(e.spatial);
  }
  return "?";
}

void print_steps(std::ostringstream& os, const std::vector<Step>& steps, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& step : steps) {
    if (const auto* e = std::get_if<optics::Element>(&step.op)) {
      os << pad << element_text(*e) << '\n';
    } else if (const auto* d = std::get_if<circuits::DetectStep>(&step.op)) {
      os << pad << "detect " << (d->resolving == detection::Resolving::NumberOnly ? "number" : "pol")
         << modes_text(d->modes) << '\n';
      if (d->accept) os << pad << "accept " << detection::to_string(*d->accept) << '\n';
      for (const auto& arm : d->arms) {
        os << pad << "when " << detection::to_string(arm.when) << '\n';
        print_steps(os, arm.body, depth + 1);
        os << pad << "end\n";
      }
    } else if (const auto* k = std::get_if<circuits::KrausStep>(&step.op)) {
      os << pad << (k->kind == circuits::KrausStep::Kind::QF ? "qf " : "mqf ") << format_mode(k->i) << ' '
         << format_mode(k->j) << '\n';
    } else if (const auto* p = std::get_if<circuits::PostselectStep>(&step.op)) {
      os << pad << "postselect" << modes_text(p->modes) << '\n';
    } else if (const auto* m = std::get_if<circuits::MarkStep>(&step.op)) {
      os << pad << "mark " << m->label << '\n';
    } else {
      os << pad << "stop\n";
    }
  }
}

}  // namespace

std::string print(const circuits::Circuit& c) {
  std::ostringstream os;
  if (!c.name.empty()) os << "name " << c.name << '\n';
  if (!c.description.empty()) os << "description " << c.description << '\n';
  os << "modes " << c.modes << '\n';
  if (c.primed > 0) os << "primed " << c.primed << '\n';
  for (const auto& src : c.inputs) {
    os << "input " << circuits::to_string(src.kind);
    if (src.kind == circuits::SourceKind::QuadbitPlus) os << ' ' << src.level;
    for (const auto& m : src.modes) {
      os << ' ' << format_mode(m.spatial);
      if (m.pol) os << fock::to_char(*m.pol);
    }
    os << '\n';
  }
  print_steps(os, c.steps, 0);
  if (c.target) os << "target " << circuits::to_string(*c.target) << '\n';
  for (const auto& r : c.recycle) os << "recycle " << circuits::to_string(r) << '\n';
  if (!c.split.empty()) os << "split" << modes_text(c.split) << '\n';
  return os.str();
}

}  // namespace quadsim::dsl
