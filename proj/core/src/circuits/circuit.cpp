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

#include "quadsim/circuits/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "quadsim/circuits/states.hpp"
#include "quadsim/error.hpp"

namespace quadsim::circuits {

namespace {

struct SourceName {
  SourceKind kind;
  const char* name;
  std::size_t arity;  // 0 means any positive count
};

constexpr SourceName kSources[] = {
    {SourceKind::Bell, "bell", 2},       {SourceKind::Ghz3, "ghz3", 3},
    {SourceKind::Ghz4, "ghz4", 4},       {SourceKind::Hes, "hes", 4},
    {SourceKind::SinglePhotons, "sp", 0}, {SourceKind::Vacuum, "vac", 0},
    {SourceKind::QuadbitPlus, "qplus", 2}, {SourceKind::PathBell, "pathbell", 4},
    {SourceKind::Qdc3, "qdc3", 6},       {SourceKind::Qdc3Prime, "qdc3p", 6},
};

struct TargetName {
  TargetFamily family;
  const char* name;
  std::size_t arity;
};

constexpr TargetName kTargets[] = {
    {TargetFamily::Bell, "bell", 2},        {TargetFamily::Bell2, "bell2", 4},
    {TargetFamily::Ghz3, "ghz3", 3},        {TargetFamily::Ghz4, "ghz4", 4},
    {TargetFamily::Hes, "hes", 4},          {TargetFamily::HesAny, "hes_any", 4},
    {TargetFamily::Qdc3, "qdc3", 6},        {TargetFamily::Qdc3Prime, "qdc3p", 6},
    {TargetFamily::Qdc4, "qdc4", 8},        {TargetFamily::Qdc4Prime, "qdc4p", 8},
};

}  // namespace

std::string to_string(SourceKind kind) {
  for (const auto& s : kSources)
    if (s.kind == kind) return s.name;
  return "?";
}

std::optional<SourceKind> source_kind_from_string(const std::string& name) {
  for (const auto& s : kSources)
    if (name == s.name) return s.kind;
  return std::nullopt;
}

std::optional<std::size_t> source_arity(SourceKind kind) {
  for (const auto& s : kSources)
    if (s.kind == kind) return s.arity == 0 ? std::nullopt : std::optional<std::size_t>(s.arity);
  return std::nullopt;
}

std::string to_string(TargetFamily family) {
  for (const auto& t : kTargets)
    if (t.family == family) return t.name;
  return "?";
}

std::optional<TargetFamily> target_family_from_string(const std::string& name) {
  for (const auto& t : kTargets)
    if (name == t.name) return t.family;
  return std::nullopt;
}

std::size_t target_arity(TargetFamily family) {
  for (const auto& t : kTargets)
    if (t.family == family) return t.arity;
  return 0;
}

std::string to_string(const TargetSpec& target) {
  std::string out = to_string(target.family);
  for (int m : target.modes) out += " " + fock::spatial_label(m);
  if (target.strict) out += " strict";
  return out;
}

bool Arm::operator==(const Arm& other) const { return when == other.when && body == other.body; }

bool DetectStep::operator==(const DetectStep& other) const {
  return modes == other.modes && resolving == other.resolving && accept == other.accept && arms == other.arms;
}

bool Step::operator==(const Step& other) const { return op == other.op; }

fock::RegistryPtr circuit_registry(const Circuit& circuit) {
  if (circuit.modes <= 0) throw Error(ErrorKind::Configuration, "circuit declares no modes");
  return fock::make_registry(circuit.modes, circuit.primed);
}

namespace {

std::vector<int> spatial_of(const Source& source) {
  std::vector<int> out;
  for (const auto& m : source.modes) out.push_back(m.spatial);
  return out;
}

QuadbitCodec codec_at(const std::vector<int>& m, std::size_t k) { return {m[2 * k], m[2 * k + 1]}; }

// Product of two states on one registry whose occupied modes are disjoint.
fock::FockState product(const fock::FockState& a, const fock::FockState& b) {
  fock::StateAccumulator acc(a.registry_ptr());
  for (const auto& [oa, xa] : a.terms()) {
    for (const auto& [ob, xb] : b.terms()) {
      std::vector<ModeId> photons = oa.photons();
      photons.insert(photons.end(), ob.photons().begin(), ob.photons().end());
      std::sort(photons.begin(), photons.end());
      acc.add(fock::OccupationVector(std::move(photons)), xa * xb);
    }
  }
  return std::move(acc).finish();
}

}  // namespace

fock::FockState source_state(const Source& source, fock::RegistryPtr registry) {
  const auto arity = source_arity(source.kind);
  if (arity && source.modes.size() != *arity)
    throw Error(ErrorKind::Configuration, "source " + to_string(source.kind) + " takes " +
                                              std::to_string(*arity) + " modes");
  const std::vector<int> m = spatial_of(source);
  for (const auto& r : source.modes)
    if (r.pol && source.kind != SourceKind::SinglePhotons)
      throw Error(ErrorKind::Configuration, "only sp sources take polarized modes");
  switch (source.kind) {
    case SourceKind::Bell: return bell_phi_plus(m[0], m[1], registry);
    case SourceKind::Ghz3:
    case SourceKind::Ghz4: return ghz(m, registry);
    case SourceKind::Hes: return hes(m[0], m[1], m[2], m[3], registry);
    case SourceKind::SinglePhotons: {
      fock::FockState s = fock::FockState::vacuum(registry);
      for (const auto& r : source.modes) s = fock::create(s, {r.spatial, r.pol.value_or(fock::Pol::H)});
      return s;
    }
    case SourceKind::Vacuum: return fock::FockState::vacuum(registry);
    case SourceKind::QuadbitPlus: {
      if (source.level < 0 || source.level > 3) throw Error(ErrorKind::Encoding, "quadbit level outside 0..3");
      return photon_product({quadbit_plus({m[0], m[1]}, source.level)}, registry);
    }
    case SourceKind::PathBell: {
      const double r = 1.0 / std::sqrt(2.0);
      const PhotonAmplitudes ha{{{fock::H(m[0]), 1.0}}};
      const PhotonAmplitudes hb{{{fock::H(m[1]), 1.0}}};
      const PhotonAmplitudes hc{{{fock::H(m[2]), 1.0}}};
      const PhotonAmplitudes hd{{{fock::H(m[3]), 1.0}}};
      return photon_superposition({{r, {ha, hc}}, {r, {hb, hd}}}, registry);
    }
    case SourceKind::Qdc3: return qdc3(codec_at(m, 0), codec_at(m, 1), codec_at(m, 2), registry);
    case SourceKind::Qdc3Prime: return qdc3_prime(codec_at(m, 0), codec_at(m, 1), codec_at(m, 2), registry);
  }
  throw Error(ErrorKind::Configuration, "unknown source kind");
}

fock::FockState initial_state(const Circuit& circuit) {
  validate(circuit);
  auto registry = circuit_registry(circuit);
  fock::FockState s = fock::FockState::vacuum(registry);
  for (const auto& src : circuit.inputs) s = product(s, source_state(src, registry));
  return s;
}

int input_photons(const Circuit& circuit) {
  int n = 0;
  for (const auto& src : circuit.inputs) {
    switch (src.kind) {
      case SourceKind::Vacuum: break;
      case SourceKind::Bell:
      case SourceKind::PathBell: n += 2; break;
      case SourceKind::Ghz3:
      case SourceKind::Qdc3:
      case SourceKind::Qdc3Prime: n += 3; break;
      case SourceKind::Ghz4: n += 4; break;
      case SourceKind::Hes: n += 2; break;
      case SourceKind::QuadbitPlus: n += 1; break;
      case SourceKind::SinglePhotons: n += static_cast<int>(src.modes.size()); break;
    }
  }
  return n;
}

namespace {

class Validator {
 public:
  explicit Validator(const Circuit& c) : circuit_(c) {}

  void check_mode(int m, const std::string& where) const {
    const bool plain = m >= 1 && m <= circuit_.modes;
    const bool primed = fock::is_primed(m) && m - fock::kPrimedOffset <= circuit_.primed;
    if (!plain && !primed) throw Error(ErrorKind::Mode, where + ": undeclared mode " + fock::spatial_label(m));
  }

  void check_live(int m, const std::set<int>& dead, const std::string& where) const {
    check_mode(m, where);
    if (dead.count(m)) throw Error(ErrorKind::Mode, where + ": mode " + fock::spatial_label(m) + " already detected");
  }

  void check_distinct(const std::vector<int>& modes, const std::string& where) const {
    std::set<int> seen;
    for (int m : modes)
      if (!seen.insert(m).second) throw Error(ErrorKind::Mode, where + ": repeated mode " + fock::spatial_label(m));
  }

  void steps(const std::vector<Step>& steps, std::set<int>& dead) const {
    for (const auto& step : steps) {
      if (const auto* e = std::get_if<optics::Element>(&step.op)) {
        for (int m : e->spatial) check_live(m, dead, optics::describe(*e));
      } else if (const auto* d = std::get_if<DetectStep>(&step.op)) {
        if (d->modes.empty()) throw Error(ErrorKind::Configuration, "detect without modes");
        check_distinct(d->modes, "detect");
        for (int m : d->modes) check_live(m, dead, "detect");
        std::set<int> after = dead;
        after.insert(d->modes.begin(), d->modes.end());
        std::set<int> merged = after;
        for (const auto& arm : d->arms) {
          for (const auto& [m, spec] : arm.when.entries)
            if (std::find(d->modes.begin(), d->modes.end(), m) == d->modes.end())
              throw Error(ErrorKind::Mode, "when: mode " + fock::spatial_label(m) + " is not detected here");
          std::set<int> inner = after;
          this->steps(arm.body, inner);
          merged.insert(inner.begin(), inner.end());
        }
        dead = merged;
      } else if (const auto* k = std::get_if<KrausStep>(&step.op)) {
        if (k->i == k->j) throw Error(ErrorKind::Mode, "filter on a single mode");
        check_live(k->i, dead, "filter");
        check_live(k->j, dead, "filter");
      } else if (const auto* p = std::get_if<PostselectStep>(&step.op)) {
        check_distinct(p->modes, "postselect");
        for (int m : p->modes) check_live(m, dead, "postselect");
      }
    }
  }

 private:
  const Circuit& circuit_;
};

}  // namespace

void validate(const Circuit& circuit) {
  if (circuit.modes <= 0) throw Error(ErrorKind::Configuration, "circuit declares no modes");
  if (circuit.primed < 0) throw Error(ErrorKind::Configuration, "negative primed mode count");
  const Validator v(circuit);
  std::set<int> used;
  for (const auto& src : circuit.inputs) {
    const auto arity = source_arity(src.kind);
    if (arity && src.modes.size() != *arity)
      throw Error(ErrorKind::Configuration,
                  "source " + to_string(src.kind) + " takes " + std::to_string(*arity) + " modes");
    if (src.modes.empty()) throw Error(ErrorKind::Configuration, "source without modes");
    for (const auto& r : src.modes) {
      v.check_mode(r.spatial, "input");
      if (src.kind != SourceKind::Vacuum && !used.insert(r.spatial).second)
        throw Error(ErrorKind::Mode, "input: mode " + fock::spatial_label(r.spatial) + " fed twice");
    }
  }
  std::set<int> dead;
  v.steps(circuit.steps, dead);
  auto check_target = [&](const TargetSpec& t) {
    if (t.modes.size() != target_arity(t.family))
      throw Error(ErrorKind::Configuration,
                  "target " + to_string(t.family) + " takes " + std::to_string(target_arity(t.family)) + " modes");
    v.check_distinct(t.modes, "target");
    for (int m : t.modes) v.check_mode(m, "target");
  };
  if (circuit.target) check_target(*circuit.target);
  for (const auto& t : circuit.recycle) check_target(t);
  for (int m : circuit.split) v.check_mode(m, "split");
}

}  // namespace quadsim::circuits
