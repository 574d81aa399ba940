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

#include "quadsim/circuits/catalogue.hpp"

#include <numbers>

#include "quadsim/error.hpp"

namespace quadsim::circuits {

namespace {

using detection::CountSpec;
using detection::NamedPredicate;
using detection::PatternLiteral;
using detection::Predicate;
using detection::Resolving;
using fock::primed;

constexpr double kPi = std::numbers::pi;

Step el(optics::Element e) { return {std::move(e)}; }
Step bs(double r_sq, int a, int b) { return el(optics::beam_splitter(r_sq, a, b)); }
Step rot(double theta, int m) { return el(optics::rotator(theta, m)); }
Step pbs(int a, int b) { return el(optics::pbs(a, b)); }
Step phase(double phi, int m) { return el(optics::phase(phi, m)); }
Step phase(double phi, int m, fock::Pol p) { return el(optics::phase(phi, m, p)); }
Step fourport(int a, int b, int c, int d) { return el(optics::four_port(a, b, c, d)); }
Step iqft(int a, int b) { return el(optics::inverse_quadbit_fourier(a, b)); }
Step mark(std::string label) { return {MarkStep{std::move(label)}}; }
Step postselect(std::vector<int> modes) { return {PostselectStep{std::move(modes)}}; }
Step kraus(KrausStep::Kind kind, int i, int j) { return {KrausStep{kind, i, j}}; }

Step detect(std::vector<int> modes, Resolving resolving, std::optional<Predicate> accept, std::vector<Arm> arms = {}) {
  return {DetectStep{std::move(modes), resolving, std::move(accept), std::move(arms)}};
}

Predicate named(NamedPredicate p) { return {p}; }
Predicate any_of(std::vector<PatternLiteral> literals) { return {std::move(literals)}; }

CountSpec total(int n) { return {n, std::nullopt, std::nullopt}; }
CountSpec hcount(int n) { return {std::nullopt, n, std::nullopt}; }
CountSpec vcount(int n) { return {std::nullopt, std::nullopt, n}; }
CountSpec hv(int h, int v) { return {std::nullopt, h, v}; }

PatternLiteral lit(std::initializer_list<std::pair<const int, CountSpec>> entries) { return {entries}; }

Source source(SourceKind kind, std::vector<int> modes, int level = 0) {
  Source s{kind, {}, level};
  for (int m : modes) s.modes.push_back({m, std::nullopt});
  return s;
}

void append(std::vector<Step>& out, const std::vector<Step>& more) { out.insert(out.end(), more.begin(), more.end()); }

std::vector<Step> j1(int a, int b) { return {bs(0.5, a, b), bs(0.5, a, primed(a)), bs(0.5, b, primed(b))}; }

std::vector<Step> j2_network() {
  std::vector<Step> s = j1(1, 2);
  append(s, j1(3, 4));
  s.push_back(bs(0.5, primed(1), primed(4)));
  s.push_back(bs(0.5, primed(2), primed(3)));
  return s;
}

std::vector<PatternLiteral> j2_bell_success() {
  return {lit({{primed(1), hcount(1)}, {primed(4), hcount(1)}}), lit({{primed(1), vcount(1)}, {primed(4), vcount(1)}}),
          lit({{primed(2), hcount(1)}, {primed(3), hcount(1)}}), lit({{primed(2), vcount(1)}, {primed(3), vcount(1)}})};
}

// Pair-forming front end of circuit B on four spatial modes (a, b, c, d):
// detectors sit on b and c, the Bell pair leaves in a and d.
std::vector<Step> b_front(int a, int b, int c, int d) {
  std::vector<Step> s;
  for (int m : {a, b, c, d}) s.push_back(rot(kPi / 4, m));
  s.push_back(pbs(a, b));
  s.push_back(pbs(c, d));
  s.push_back(rot(kPi / 4, b));
  s.push_back(rot(kPi / 4, c));
  s.push_back(pbs(b, c));
  s.push_back(rot(kPi / 4, b));
  s.push_back(rot(kPi / 4, c));
  return s;
}

std::vector<PatternLiteral> b_exact_pairs(int b, int c) {
  return {lit({{b, hcount(1)}, {c, hcount(1)}}), lit({{b, vcount(1)}, {c, vcount(1)}})};
}

std::vector<PatternLiteral> b_direct(int b, int c) {
  std::vector<PatternLiteral> out = b_exact_pairs(b, c);
  out.push_back(lit({{b, hcount(1)}, {c, vcount(1)}}));
  out.push_back(lit({{b, vcount(1)}, {c, hcount(1)}}));
  out.push_back(lit({{b, hv(1, 1)}}));
  out.push_back(lit({{c, hv(1, 1)}}));
  return out;
}

// Turns the bunched state of the front end into the Bell pair on modes 1, 4,
// conditioned on vacuum at 1'. Mode 5 carries the attenuated V component.
std::vector<Step> b_bunched_arm(bool bs_from_4, double rot_angle) {
  std::vector<Step> s{mark("bunched")};
  s.push_back(bs_from_4 ? bs(0.5, 4, 1) : bs(0.5, 1, 4));
  s.push_back(pbs(1, 4));
  s.push_back(rot(rot_angle, 1));
  s.push_back(mark("two-photon bunching state"));
  s.push_back(pbs(1, 5));
  s.push_back(bs(2.0 / 3.0, 5, primed(1)));
  s.push_back(phase(kPi / 2, 1));
  s.push_back(pbs(1, 5));
  s.push_back(detect({primed(1)}, Resolving::PolarizationResolving, named(NamedPredicate::Vacuum)));
  s.push_back(bs(0.5, 4, 1));
  return s;
}

std::vector<Step> k1_front() {
  return {kraus(KrausStep::Kind::MQF, 3, 5), pbs(4, 6)};
}

std::vector<Step> k1_tail() {
  return {bs(0.75, 4, primed(4)),
          rot(-kPi / 4, 3),
          rot(-kPi / 4, 6),
          bs(0.5, 6, 3),
          detect({3, 6, primed(4)}, Resolving::PolarizationResolving,
                 any_of({lit({{3, total(1)}}), lit({{6, total(1)}})}))};
}

std::vector<Step> t3(int a, int b) {
  return {fourport(a, b, primed(a), primed(b))};
}

}  // namespace

Circuit build_j1() {
  Circuit c;
  c.name = "J1";
  c.description = "Bell pair through three 50:50 beam splitters with vacuum in 1' and 2'";
  c.modes = 2;
  c.primed = 2;
  c.inputs = {source(SourceKind::Bell, {1, 2})};
  c.steps = j1(1, 2);
  c.split = {1, primed(1)};
  return c;
}

Circuit build_j2(J2Source src) {
  Circuit c;
  c.modes = 4;
  c.primed = 4;
  c.target = TargetSpec{TargetFamily::HesAny, {1, 2, 3, 4}, false};
  const std::vector<int> outs{primed(1), primed(2), primed(3), primed(4)};
  const std::vector<Step> undo{mark("undo"), bs(0.5, 2, 1), bs(0.5, 4, 3)};
  switch (src) {
    case J2Source::Bell2:
      c.name = "J2:bell2";
      c.description = "HES from two Bell pairs; success on two equally polarized photons in 1',4' or 2',3'";
      c.inputs = {source(SourceKind::Bell, {1, 2}), source(SourceKind::Bell, {3, 4})};
      c.steps = j2_network();
      c.steps.push_back(detect(outs, Resolving::PolarizationResolving, any_of(j2_bell_success())));
      append(c.steps, undo);
      c.recycle = {TargetSpec{TargetFamily::Bell2, {1, 2, 3, 4}, false}};
      break;
    case J2Source::Ghz4:
      c.name = "J2:ghz4";
      c.description = "HES from a four-photon GHZ state with number-resolving detectors";
      c.inputs = {source(SourceKind::Ghz4, {1, 2, 3, 4})};
      c.steps = j2_network();
      c.steps.push_back(detect(outs, Resolving::NumberOnly, named(NamedPredicate::PairNoBunch)));
      append(c.steps, undo);
      break;
    case J2Source::SinglePhotons8: {
      c.name = "J2:sp8";
      c.description = "HES from eight single photons: two pair sources feeding J2";
      c.modes = 14;
      c.inputs = {source(SourceKind::SinglePhotons, {1, 11, 12, 2, 3, 13, 14, 4})};
      c.steps = b_front(1, 11, 12, 2);
      c.steps.push_back(detect({11, 12}, Resolving::PolarizationResolving, any_of(b_exact_pairs(11, 12))));
      append(c.steps, b_front(3, 13, 14, 4));
      c.steps.push_back(detect({13, 14}, Resolving::PolarizationResolving, any_of(b_exact_pairs(13, 14))));
      append(c.steps, j2_network());
      c.steps.push_back(detect(outs, Resolving::PolarizationResolving, any_of(j2_bell_success())));
      append(c.steps, undo);
      break;
    }
  }
  c.split = {1, 2};
  return c;
}

Circuit build_k1() {
  Circuit c;
  c.name = "K1";
  c.description = "Three-photon quadbit cluster from two HESs and the modified filter";
  c.modes = 8;
  c.primed = 4;
  c.inputs = {source(SourceKind::Hes, {1, 2, 3, 4}), source(SourceKind::Hes, {5, 6, 7, 8})};
  c.steps = k1_front();
  append(c.steps, k1_tail());
  c.target = TargetSpec{TargetFamily::Qdc3, {1, 2, 5, 4, 7, 8}, false};
  c.split = {1, 2};
  return c;
}

Circuit build_k1_hes_qdc3() {
  Circuit c;
  c.name = "K1:hes+qdc3";
  c.description = "Four-photon star cluster by fusing an HES onto a leaf of a three-photon cluster";
  c.modes = 10;
  c.primed = 4;
  c.inputs = {source(SourceKind::Hes, {1, 2, 3, 4}), source(SourceKind::Qdc3, {5, 6, 7, 8, 9, 10})};
  c.steps = {iqft(5, 6)};
  append(c.steps, k1_front());
  append(c.steps, k1_tail());
  c.target = TargetSpec{TargetFamily::Qdc4, {1, 2, 7, 8, 5, 4, 9, 10}, false};
  c.split = {1, 2};
  return c;
}

Circuit build_k2() {
  Circuit c;
  c.name = "K2";
  c.description = "Four-photon star cluster from two HESs, the modified filter and the full filter";
  c.modes = 8;
  c.primed = 0;
  c.inputs = {source(SourceKind::Hes, {1, 2, 3, 4}), source(SourceKind::Hes, {5, 6, 7, 8})};
  c.steps = {kraus(KrausStep::Kind::MQF, 3, 5), kraus(KrausStep::Kind::QF, 4, 6)};
  c.target = TargetSpec{TargetFamily::Qdc4, {1, 2, 3, 4, 5, 6, 7, 8}, false};
  c.split = {1, 2};
  return c;
}

Circuit build_k3(K3Inputs inputs, K3Ancilla ancilla) {
  Circuit c;
  c.modes = inputs == K3Inputs::Hes2 ? 8 : 12;
  c.primed = 6;
  std::string name = "K3:";
  if (inputs == K3Inputs::Hes2) {
    name += "hes2";
    c.inputs = {source(SourceKind::Hes, {1, 2, 3, 4}), source(SourceKind::Hes, {5, 6, 7, 8})};
  } else {
    name += "qdc3";
    c.inputs = {source(SourceKind::Qdc3, {9, 10, 1, 2, 3, 4}), source(SourceKind::Qdc3, {5, 6, 7, 8, 11, 12})};
    c.steps = {iqft(3, 4), iqft(5, 6)};
  }
  switch (ancilla) {
    case K3Ancilla::None: name += ":none"; break;
    case K3Ancilla::TwoSingles:
      name += ":ex1";
      c.inputs.push_back(source(SourceKind::QuadbitPlus, {primed(3), primed(4)}, 0));
      c.inputs.push_back(source(SourceKind::QuadbitPlus, {primed(5), primed(6)}, 2));
      break;
    case K3Ancilla::BellPair:
      name += ":ex2";
      c.inputs.push_back(source(SourceKind::PathBell, {primed(3), primed(4), primed(5), primed(6)}));
      append(c.steps, {rot(kPi / 4, primed(3)), rot(kPi / 4, primed(4)), rot(3 * kPi / 4, primed(5)),
                       rot(3 * kPi / 4, primed(6))});
      break;
    case K3Ancilla::Hes:
      name += ":ex3";
      c.inputs.push_back(source(SourceKind::Hes, {primed(3), primed(4), primed(5), primed(6)}));
      append(c.steps, {rot(kPi / 2, primed(5)), rot(kPi / 2, primed(6)), phase(kPi, primed(5), fock::Pol::H),
                       phase(kPi, primed(6), fock::Pol::H)});
      break;
  }
  c.name = name;
  c.description = "Quadbit fusion of photons (3,4) and (5,6) by two T3 gates";
  append(c.steps, {rot(kPi / 2, 5), rot(kPi / 2, 6)});
  append(c.steps, t3(3, 5));
  append(c.steps, t3(4, 6));
  c.steps.push_back(detect({3, 5, primed(3), primed(5)}, Resolving::PolarizationResolving,
                           named(NamedPredicate::OneHOneV)));
  c.steps.push_back(detect({4, 6, primed(4), primed(6)}, Resolving::PolarizationResolving,
                           named(NamedPredicate::OneHOneV)));
  if (inputs == K3Inputs::Hes2) {
    c.target = TargetSpec{TargetFamily::Hes, {1, 2, 7, 8}, true};
    c.split = {1, 2};
  } else {
    c.target = TargetSpec{TargetFamily::Qdc4, {9, 10, 1, 2, 7, 8, 11, 12}, true};
    c.split = {9, 10, 1, 2};
  }
  return c;
}

Circuit build_t3() {
  Circuit c;
  c.name = "T3";
  c.description = "T3 gate on two Bell pairs; success on one H and one V click";
  c.modes = 7;
  c.primed = 5;
  c.inputs = {source(SourceKind::Bell, {1, 3}), source(SourceKind::Bell, {5, 7})};
  c.steps = {rot(kPi / 2, 5)};
  append(c.steps, t3(3, 5));
  c.steps.push_back(detect({3, 5, primed(3), primed(5)}, Resolving::PolarizationResolving,
                           named(NamedPredicate::OneHOneV)));
  c.target = TargetSpec{TargetFamily::Bell, {1, 7}, false};
  c.split = {1};
  return c;
}

Circuit build_b(bool with_correction) {
  Circuit c;
  c.name = with_correction ? "B" : "B:nocorrection";
  c.description = with_correction ? "Bell pair from four single photons, bunched outcomes corrected"
                                  : "Bell pair from four single photons, direct outcomes only";
  c.modes = with_correction ? 5 : 4;
  c.primed = with_correction ? 1 : 0;
  c.inputs = {source(SourceKind::SinglePhotons, {1, 2, 3, 4})};
  c.steps = b_front(1, 2, 3, 4);
  std::vector<PatternLiteral> accept = b_direct(2, 3);
  std::vector<Arm> arms;
  if (with_correction) {
    const PatternLiteral h2 = lit({{2, hcount(2)}});
    const PatternLiteral v2 = lit({{2, vcount(2)}});
    const PatternLiteral h3 = lit({{3, hcount(2)}});
    const PatternLiteral v3 = lit({{3, vcount(2)}});
    accept.insert(accept.end(), {h2, v2, h3, v3});
    arms = {{h2, b_bunched_arm(true, kPi / 4)},
            {v2, b_bunched_arm(false, -kPi / 4)},
            {h3, b_bunched_arm(true, -kPi / 4)},
            {v3, b_bunched_arm(false, kPi / 4)}};
  }
  c.steps.push_back(detect({2, 3}, Resolving::PolarizationResolving, any_of(accept), arms));
  c.target = TargetSpec{TargetFamily::Bell, {1, 4}, false};
  c.split = {1};
  return c;
}

Circuit build_ghz_ballistic(int photons) {
  if (photons != 3 && photons != 4) throw Error(ErrorKind::Configuration, "ballistic GHZ takes 3 or 4 photons");
  Circuit c;
  c.name = "GHZ" + std::to_string(photons) + ":ballistic";
  c.description = "GHZ state from single photons: pair source, then Type-I fusion of fresh pairs";
  c.modes = 2 * photons;
  std::vector<int> all;
  for (int m = 1; m <= c.modes; ++m) all.push_back(m);
  c.inputs = {source(SourceKind::SinglePhotons, all)};
  c.steps = b_front(1, 2, 3, 4);
  c.steps.push_back(detect({2, 3}, Resolving::PolarizationResolving, any_of({lit({{2, total(1)}, {3, total(1)}})})));
  std::vector<int> outputs{1, 4};
  int end = 4;
  for (int a = 5; a + 1 <= c.modes; a += 2) {
    const int b = a + 1;
    append(c.steps, {rot(kPi / 4, a), rot(kPi / 4, b), pbs(a, b), pbs(end, a), rot(kPi / 4, a)});
    c.steps.push_back(detect({a}, Resolving::PolarizationResolving, named(NamedPredicate::OnePhoton)));
    outputs.push_back(b);
    end = b;
  }
  c.steps.push_back(postselect(outputs));
  c.target = TargetSpec{photons == 3 ? TargetFamily::Ghz3 : TargetFamily::Ghz4, outputs, false};
  c.split = {1};
  return c;
}

Circuit build_type1(Type1Inputs inputs) {
  Circuit c;
  if (inputs == Type1Inputs::BellBell) {
    c.name = "TYPE1:bell+bell";
    c.description = "Type-I fusion of two Bell pairs";
    c.modes = 4;
    c.inputs = {source(SourceKind::Bell, {1, 2}), source(SourceKind::Bell, {3, 4})};
    c.target = TargetSpec{TargetFamily::Ghz3, {1, 2, 4}, false};
  } else {
    c.name = "TYPE1:bell+ghz3";
    c.description = "Type-I fusion of a Bell pair with a three-photon GHZ state";
    c.modes = 5;
    c.inputs = {source(SourceKind::Bell, {1, 2}), source(SourceKind::Ghz3, {3, 4, 5})};
    c.target = TargetSpec{TargetFamily::Ghz4, {1, 2, 4, 5}, false};
  }
  c.steps = {pbs(2, 3), rot(kPi / 4, 3),
             detect({3}, Resolving::PolarizationResolving, named(NamedPredicate::OnePhoton))};
  c.split = {1};
  return c;
}

Circuit build_filter_demo(bool modified) {
  Circuit c;
  c.name = modified ? "MQF:bell2" : "QF:bell2";
  c.description = modified ? "Modified filter on two Bell pairs" : "Filter on two Bell pairs";
  c.modes = 4;
  c.inputs = {source(SourceKind::Bell, {1, 2}), source(SourceKind::Bell, {3, 4})};
  c.steps = {kraus(modified ? KrausStep::Kind::MQF : KrausStep::Kind::QF, 2, 3)};
  c.target = TargetSpec{TargetFamily::Ghz4, {1, 2, 3, 4}, false};
  c.split = {1, 2};
  return c;
}

std::vector<std::string> catalogue_names() {
  return {"J1",          "J2:bell2",        "J2:ghz4",         "J2:sp8",          "K1",
          "K1:hes+qdc3", "K2",              "K3:hes2:none",    "K3:hes2:ex1",     "K3:hes2:ex2",
          "K3:hes2:ex3", "K3:qdc3:none",    "K3:qdc3:ex1",     "K3:qdc3:ex2",     "K3:qdc3:ex3",
          "T3",          "B",               "B:nocorrection",  "BELL:sp4",        "GHZ3:ballistic",
          "GHZ4:ballistic", "TYPE1:bell+bell", "TYPE1:bell+ghz3", "QF:bell2",     "MQF:bell2"};
}

Circuit builtin_circuit(const std::string& name) {
  if (name == "J1") return build_j1();
  if (name == "J2:bell2") return build_j2(J2Source::Bell2);
  if (name == "J2:ghz4") return build_j2(J2Source::Ghz4);
  if (name == "J2:sp8") return build_j2(J2Source::SinglePhotons8);
  if (name == "K1") return build_k1();
  if (name == "K1:hes+qdc3") return build_k1_hes_qdc3();
  if (name == "K2") return build_k2();
  if (name.rfind("K3:", 0) == 0) {
    const auto second = name.find(':', 3);
    if (second != std::string::npos) {
      const std::string in = name.substr(3, second - 3);
      const std::string anc = name.substr(second + 1);
      std::optional<K3Inputs> inputs;
      if (in == "hes2") inputs = K3Inputs::Hes2;
      if (in == "qdc3") inputs = K3Inputs::Qdc3;
      std::optional<K3Ancilla> ancilla;
      if (anc == "none") ancilla = K3Ancilla::None;
      if (anc == "ex1") ancilla = K3Ancilla::TwoSingles;
      if (anc == "ex2") ancilla = K3Ancilla::BellPair;
      if (anc == "ex3") ancilla = K3Ancilla::Hes;
      if (inputs && ancilla) return build_k3(*inputs, *ancilla);
    }
  }
  if (name == "T3") return build_t3();
  if (name == "B") return build_b(true);
  if (name == "B:nocorrection") return build_b(false);
  if (name == "BELL:sp4") {
    Circuit c = build_b(true);
    c.name = "BELL:sp4";
    return c;
  }
  if (name == "GHZ3:ballistic") return build_ghz_ballistic(3);
  if (name == "GHZ4:ballistic") return build_ghz_ballistic(4);
  if (name == "TYPE1:bell+bell") return build_type1(Type1Inputs::BellBell);
  if (name == "TYPE1:bell+ghz3") return build_type1(Type1Inputs::BellGhz3);
  if (name == "QF:bell2") return build_filter_demo(false);
  if (name == "MQF:bell2") return build_filter_demo(true);
  throw Error(ErrorKind::Configuration, "unknown circuit '" + name + "'");
}

}  // namespace quadsim::circuits
