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

#include "quadsim/analysis/protocol.hpp"

#include <algorithm>
#include <future>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include <Eigen/Dense>

#include "quadsim/circuits/catalogue.hpp"
#include "quadsim/circuits/correction.hpp"
#include "quadsim/detection/measurement.hpp"
#include "quadsim/error.hpp"

namespace quadsim::analysis {

using circuits::Circuit;
using circuits::Step;
using fock::FockState;

std::string to_string(BranchClass cls) {
  switch (cls) {
    case BranchClass::Success: return "success";
    case BranchClass::Recyclable: return "recyclable";
    case BranchClass::Failure: return "failure";
  }
  return "?";
}

Rational nearest_rational(double x, long max_denominator) {
  const bool negative = x < 0.0;
  double rest = std::abs(x);
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational best{0, 1};
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    if (a > 1e12) break;
    const long ai = static_cast<long>(a);
    const long p2 = ai * p1 + p0;
    const long q2 = ai * q1 + q0;
    if (q2 > max_denominator) break;
    best = {p2, q2};
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = rest - a;
    if (frac < 1e-12) break;
    rest = 1.0 / frac;
  }
  if (negative) best.numerator = -best.numerator;
  return best;
}

std::string to_string(const Rational& r) {
  if (r.denominator == 1) return std::to_string(r.numerator);
  return std::to_string(r.numerator) + "/" + std::to_string(r.denominator);
}

std::string Branch::label() const {
  std::string out;
  for (const auto& p : patterns) {
    if (!out.empty()) out += " ; ";
    out += detection::to_string(p);
  }
  return out.empty() ? std::string("-") : out;
}

bool Branch::has_mark(const std::string& mark) const {
  return std::find(marks.begin(), marks.end(), mark) != marks.end();
}

double ProtocolResult::total_probability() const {
  double t = 0.0;
  for (const auto& b : branches) t += b.probability;
  return t;
}

std::optional<double> ProtocolResult::min_success_fidelity() const {
  std::optional<double> out;
  for (const auto& b : branches) {
    if (b.cls != BranchClass::Success || !b.fidelity) continue;
    out = out ? std::min(*out, *b.fidelity) : *b.fidelity;
  }
  return out;
}

int photon_cap_default() {
  if (const char* env = std::getenv("QUADSIM_PHOTON_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
  }
  return 10;
}

double retry_adjusted(double success, double recyclable) {
  if (recyclable >= 1.0) throw Error(ErrorKind::Parameter, "recyclable probability must be below 1");
  if (success < 0.0 || recyclable < 0.0 || success + recyclable > 1.0 + 1e-12)
    throw Error(ErrorKind::Parameter, "probabilities must be nonnegative and sum to at most 1");
  return success / (1.0 - recyclable);
}

SchmidtReport entanglement_report(const FockState& state, const std::vector<int>& side_a) {
  const std::set<int> a(side_a.begin(), side_a.end());
  bool has_a = false;
  bool has_b = false;
  for (int s : state.registry().spatial_modes()) (a.count(s) ? has_a : has_b) = true;
  if (a.empty() || !has_a || !has_b) throw Error(ErrorKind::Partition, "both sides of the bipartition need modes");

  std::map<fock::OccupationVector, Eigen::Index> rows;
  std::map<fock::OccupationVector, Eigen::Index> cols;
  std::vector<std::tuple<fock::OccupationVector, fock::OccupationVector, fock::Amplitude>> entries;
  for (const auto& [occ, amp] : state.terms()) {
    std::vector<fock::ModeId> pa;
    std::vector<fock::ModeId> pb;
    for (const auto& m : occ.photons()) (a.count(m.spatial) ? pa : pb).push_back(m);
    fock::OccupationVector oa(std::move(pa));
    fock::OccupationVector ob(std::move(pb));
    rows.emplace(oa, 0);
    cols.emplace(ob, 0);
    entries.emplace_back(std::move(oa), std::move(ob), amp);
  }
  Eigen::Index i = 0;
  for (auto& [k, v] : rows) v = i++;
  i = 0;
  for (auto& [k, v] : cols) v = i++;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (const auto& [oa, ob, amp] : entries) m(rows.at(oa), cols.at(ob)) += amp;
  const double n = m.norm();
  if (n > 0.0) m /= n;
  SchmidtReport r;
  if (m.size() == 0) return r;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    const double s = svd.singularValues()(k);
    if (s > 1e-9) r.coefficients.push_back(s);
  }
  r.rank = static_cast<int>(r.coefficients.size());
  r.product = r.rank == 1;
  return r;
}

namespace {

struct Frame {
  const std::vector<Step>* steps;
  std::size_t next;
};

struct Path {
  std::vector<detection::DetectionPattern> patterns;
  std::vector<std::string> marks;
  double probability = 1.0;
  int detections = 0;
};

class Runner {
 public:
  std::vector<Branch> leaves;

  void exec(FockState state, std::vector<Frame> stack, Path path) {
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next >= top.steps->size()) {
        stack.pop_back();
        continue;
      }
      const Step& step = (*top.steps)[top.next++];
      if (const auto* e = std::get_if<optics::Element>(&step.op)) {
        state = optics::apply(state, *e);
      } else if (const auto* k = std::get_if<circuits::KrausStep>(&step.op)) {
        const auto op = k->kind == circuits::KrausStep::Kind::QF ? detection::qf_operator(k->i, k->j)
                                                                 : detection::mqf_operator(k->i, k->j);
        const FockState raw = detection::apply_kraus_raw(state, op);
        const double p = raw.norm_squared();
        if (1.0 - p > detection::kZeroProbability)
          stateless(path, path.probability * (1.0 - p), "rejected by " + op.name + " " + fock::spatial_label(k->i) +
                                                            " " + fock::spatial_label(k->j));
        if (p < detection::kZeroProbability) return;
        state = fock::normalize(raw);
        path.probability *= p;
      } else if (const auto* ps = std::get_if<circuits::PostselectStep>(&step.op)) {
        std::vector<FockState::Term> kept;
        for (const auto& term : state.terms()) {
          const bool ok = std::all_of(ps->modes.begin(), ps->modes.end(),
                                      [&](int m) { return term.first.count_spatial(m) == 1; });
          if (ok) kept.push_back(term);
        }
        const FockState sel(state.registry_ptr(), std::move(kept), state.prune_eps());
        const double p = sel.norm_squared();
        if (1.0 - p > detection::kZeroProbability)
          stateless(path, path.probability * (1.0 - p), "rejected by output coincidence");
        if (p < detection::kZeroProbability) return;
        state = fock::normalize(sel);
        path.probability *= p;
      } else if (const auto* mk = std::get_if<circuits::MarkStep>(&step.op)) {
        path.marks.push_back(mk->label);
      } else if (std::holds_alternative<circuits::StopStep>(step.op)) {
        break;
      } else if (const auto* d = std::get_if<circuits::DetectStep>(&step.op)) {
        ++path.detections;
        for (auto& b : detection::enumerate_outcomes(state, d->modes, d->resolving)) {
          Path next = path;
          next.patterns.push_back(b.pattern);
          next.probability *= b.probability;
          if (d->accept && !d->accept->matches(b.pattern)) {
            leaf(std::move(next), std::move(*b.post_state), BranchClass::Failure,
                 "rejected at detection " + std::to_string(path.detections));
            continue;
          }
          std::vector<Frame> sub = stack;
          for (const auto& arm : d->arms) {
            if (arm.when.matches(b.pattern)) {
              sub.push_back({&arm.body, 0});
              break;
            }
          }
          exec(std::move(*b.post_state), std::move(sub), std::move(next));
        }
        return;
      }
    }
    leaf(std::move(path), std::move(state), BranchClass::Success, "accepted");
  }

 private:
  void leaf(Path path, FockState state, BranchClass cls, std::string note) {
    Branch b;
    b.patterns = std::move(path.patterns);
    b.marks = std::move(path.marks);
    b.probability = path.probability;
    b.cls = cls;
    b.note = std::move(note);
    b.state = std::move(state);
    leaves.push_back(std::move(b));
  }

  void stateless(const Path& path, double p, std::string note) {
    Branch b;
    b.patterns = path.patterns;
    b.marks = path.marks;
    b.probability = p;
    b.cls = BranchClass::Failure;
    b.note = std::move(note);
    leaves.push_back(std::move(b));
  }
};

}  // namespace

ProtocolResult run_protocol(const Circuit& circuit, const RunOptions& options) {
  circuits::validate(circuit);
  const int cap = options.photon_cap > 0 ? options.photon_cap : photon_cap_default();
  const int photons = circuits::input_photons(circuit);
  if (photons > cap)
    throw Error(ErrorKind::Resource, circuit.name + " uses " + std::to_string(photons) +
                                         " photons, above the cap of " + std::to_string(cap));
  Runner runner;
  runner.exec(circuits::initial_state(circuit), {{&circuit.steps, 0}}, {});

  ProtocolResult result;
  result.circuit = circuit.name;
  circuits::CorrectionCache cache;
  for (auto& b : runner.leaves) {
    if (b.state && options.corrections) {
      if (b.cls == BranchClass::Success && circuit.target) {
        const auto c = circuits::find_correction(*b.state, *circuit.target, 3, &cache);
        b.fidelity = c.fidelity;
        b.matched = c.matched;
        if (c.found) {
          b.correction = c.elements;
        } else if (circuit.target->strict) {
          b.cls = BranchClass::Failure;
          b.note = "accepted, no correction reaches the target";
        }
      } else if (b.cls == BranchClass::Failure) {
        for (const auto& r : circuit.recycle) {
          const auto c = circuits::find_correction(*b.state, r, 3, &cache);
          if (c.found) {
            b.cls = BranchClass::Recyclable;
            b.fidelity = c.fidelity;
            b.matched = c.matched;
            b.correction = c.elements;
            break;
          }
        }
      }
    }
    if (b.state && options.schmidt && !circuit.split.empty()) {
      try {
        b.schmidt = entanglement_report(*b.state, circuit.split).coefficients;
      } catch (const Error&) {
        b.schmidt.clear();
      }
    }
    switch (b.cls) {
      case BranchClass::Success: result.success_probability += b.probability; break;
      case BranchClass::Recyclable: result.recyclable_probability += b.probability; break;
      case BranchClass::Failure: result.failure_probability += b.probability; break;
    }
  }
  result.branches = std::move(runner.leaves);
  if (result.recyclable_probability > 0.0 && result.recyclable_probability < 1.0)
    result.retry_adjusted_probability = retry_adjusted(result.success_probability, result.recyclable_probability);
  return result;
}

ClassReport class_report(const Circuit& circuit, const ProtocolResult& result) {
  ClassReport r;
  r.circuit = result.circuit;
  std::map<std::tuple<bool, int, long>, ClassEntry> groups;
  for (const auto& b : result.branches) {
    r.total += b.probability;
    if (!b.state) {
      r.stateless += b.probability;
      continue;
    }
    const bool accepted = b.note.rfind("accepted", 0) == 0;
    double f = 0.0;
    if (circuit.target) f = circuits::fidelity(*b.state, circuits::target_state(*circuit.target, b.state->registry_ptr()));
    int rank = 0;
    if (!circuit.split.empty()) {
      try {
        rank = entanglement_report(*b.state, circuit.split).rank;
      } catch (const Error&) {
        rank = 0;
      }
    }
    const long fkey = std::lround(f * 1e6);
    auto& e = groups[{accepted, rank, fkey}];
    e.accepted = accepted;
    e.schmidt_rank = rank;
    e.fidelity = static_cast<double>(fkey) / 1e6;
    e.probability += b.probability;
    ++e.branches;
    if (accepted) r.accepted += b.probability;
    if (rank >= 2) r.entangled += b.probability;
    if (rank == 1) r.product += b.probability;
  }
  for (auto& [k, e] : groups) r.entries.push_back(e);
  return r;
}

namespace {

struct RowSpec {
  const char* resources;
  const char* output;
  Rational expected;
  const char* circuit;
};

constexpr RowSpec kRows[] = {
    {"4 SP", "BP", {1, 4}, "BELL:sp4"},
    {"6 SP", "3GHZ", {1, 32}, "GHZ3:ballistic"},
    {"8 SP", "4GHZ", {1, 128}, "GHZ4:ballistic"},
    {"2 BP", "3GHZ", {1, 2}, "TYPE1:bell+bell"},
    {"1 BP + 1 3GHZ", "4GHZ", {1, 2}, "TYPE1:bell+ghz3"},
    {"8 SP", "HES", {1, 4096}, "J2:sp8"},
    {"2 BP", "HES", {1, 16}, "J2:bell2"},
    {"1 4GHZ", "HES", {3, 16}, "J2:ghz4"},
    {"4 SP + 2 HES", "3QdC", {1, 256}, "K1"},
    {"6 SP + 2 HES", "4QdC", {1, 1024}, "K2"},
    {"6 SP + 1 HES + 1 3QdC", "4QdC", {1, 256}, "K1:hes+qdc3"},
    {"2 SP + 2 3QdC", "4QdC", {1, 64}, "K3:qdc3:ex1"},
    {"1 BP + 2 3QdC", "4QdC", {1, 32}, "K3:qdc3:ex2"},
    {"1 HES + 2 3QdC", "4QdC", {1, 16}, "K3:qdc3:ex3"},
};

}  // namespace

std::vector<ResourceRow> reproduce_table1(const RunOptions& options) {
  // Rows are independent runs; each owns its correction cache.
  std::vector<std::future<double>> pending;
  for (const auto& spec : kRows)
    pending.push_back(std::async(std::launch::async, [&options, name = std::string(spec.circuit)] {
      return run_protocol(circuits::builtin_circuit(name), options).success_probability;
    }));
  std::vector<ResourceRow> rows;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto& spec = kRows[i];
    ResourceRow row{spec.resources, spec.output, spec.expected, spec.circuit, pending[i].get(), false};
    row.pass = std::abs(row.computed - row.expected.value()) <= 1e-9;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace quadsim::analysis
