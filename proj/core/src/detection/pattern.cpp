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

#include "quadsim/detection/pattern.hpp"

#include <algorithm>

#include "quadsim/fock/mode.hpp"

namespace quadsim::detection {

int DetectionPattern::total() const {
  int n = 0;
  for (const auto& [m, c] : counts) n += c.total;
  return n;
}

int DetectionPattern::total_h() const {
  int n = 0;
  for (const auto& [m, c] : counts) n += c.h;
  return n;
}

int DetectionPattern::total_v() const {
  int n = 0;
  for (const auto& [m, c] : counts) n += c.v;
  return n;
}

ModeCount DetectionPattern::at(int spatial) const {
  auto it = counts.find(spatial);
  return it == counts.end() ? ModeCount{} : it->second;
}

bool DetectionPattern::operator<(const DetectionPattern& other) const {
  if (resolving != other.resolving) return resolving < other.resolving;
  return std::lexicographical_compare(counts.begin(), counts.end(), other.counts.begin(), other.counts.end());
}

namespace {

std::string count_text(const ModeCount& c, Resolving resolving) {
  if (resolving == Resolving::NumberOnly) return std::to_string(c.total);
  std::string s;
  if (c.h > 0) s += "H" + std::to_string(c.h);
  if (c.v > 0) s += "V" + std::to_string(c.v);
  return s;
}

}  // namespace

std::string to_string(const DetectionPattern& pattern) {
  std::string out;
  for (const auto& [m, c] : pattern.counts) {
    if (c.total == 0) continue;
    if (!out.empty()) out += ',';
    out += fock::spatial_label(m) + "=" + count_text(c, pattern.resolving);
  }
  return out.empty() ? std::string("vacuum") : out;
}

bool CountSpec::matches(const ModeCount& c, Resolving resolving) const {
  if (total && c.total != *total) return false;
  if (resolving == Resolving::NumberOnly && (h || v)) return false;
  // A polarized count pins the unnamed channel to zero.
  if ((h || v) && (c.h != h.value_or(0) || c.v != v.value_or(0))) return false;
  return true;
}

bool PatternLiteral::matches(const DetectionPattern& pattern) const {
  for (const auto& [m, spec] : entries)
    if (!spec.matches(pattern.at(m), pattern.resolving)) return false;
  for (const auto& [m, c] : pattern.counts)
    if (c.total != 0 && !entries.count(m)) return false;
  return true;
}

std::string to_string(const PatternLiteral& literal) {
  if (literal.entries.empty()) return "vacuum";
  std::string out;
  for (const auto& [m, spec] : literal.entries) {
    if (!out.empty()) out += ',';
    out += fock::spatial_label(m) + "=";
    if (spec.total) {
      out += std::to_string(*spec.total);
    } else {
      const int h = spec.h.value_or(0);
      const int v = spec.v.value_or(0);
      if (h > 0 || v == 0) out += "H" + std::to_string(h);
      if (v > 0) out += "V" + std::to_string(v);
    }
  }
  return out;
}

namespace {

struct NamedEntry {
  NamedPredicate predicate;
  const char* name;
};

constexpr NamedEntry kNamed[] = {
    {NamedPredicate::Any, "any"},
    {NamedPredicate::Vacuum, "vacuum"},
    {NamedPredicate::OnePhoton, "one_photon"},
    {NamedPredicate::TwoPhotons, "two_photons"},
    {NamedPredicate::OneHOneV, "one_h_one_v"},
    {NamedPredicate::PairNoBunch, "pair_no_bunch"},
};

}  // namespace

std::optional<NamedPredicate> named_predicate_from_string(const std::string& name) {
  for (const auto& e : kNamed)
    if (name == e.name) return e.predicate;
  return std::nullopt;
}

std::string to_string(NamedPredicate predicate) {
  for (const auto& e : kNamed)
    if (e.predicate == predicate) return e.name;
  return "?";
}

std::vector<std::string> named_predicate_names() {
  std::vector<std::string> out;
  for (const auto& e : kNamed) out.emplace_back(e.name);
  return out;
}

namespace {

bool matches_named(NamedPredicate p, const DetectionPattern& pattern) {
  switch (p) {
    case NamedPredicate::Any: return true;
    case NamedPredicate::Vacuum: return pattern.is_vacuum();
    case NamedPredicate::OnePhoton: return pattern.total() == 1;
    case NamedPredicate::TwoPhotons: return pattern.total() == 2;
    case NamedPredicate::OneHOneV:
      return pattern.resolving == Resolving::PolarizationResolving && pattern.total_h() == 1 &&
             pattern.total_v() == 1;
    case NamedPredicate::PairNoBunch:
      if (pattern.total() != 2) return false;
      return std::all_of(pattern.counts.begin(), pattern.counts.end(), [&](const auto& kv) {
        const ModeCount& c = kv.second;
        if (pattern.resolving == Resolving::NumberOnly) return c.total <= 1;
        return c.h <= 1 && c.v <= 1;
      });
  }
  return false;
}

}  // namespace

bool Predicate::matches(const DetectionPattern& pattern) const {
  if (const auto* named = std::get_if<NamedPredicate>(&rule)) return matches_named(*named, pattern);
  const auto& alts = std::get<std::vector<PatternLiteral>>(rule);
  return std::any_of(alts.begin(), alts.end(), [&](const PatternLiteral& l) { return l.matches(pattern); });
}

std::string to_string(const Predicate& predicate) {
  if (const auto* named = std::get_if<NamedPredicate>(&predicate.rule)) return to_string(*named);
  std::string out;
  for (const auto& l : std::get<std::vector<PatternLiteral>>(predicate.rule)) {
    if (!out.empty()) out += " | ";
    out += to_string(l);
  }
  return out;
}

}  // namespace quadsim::detection
