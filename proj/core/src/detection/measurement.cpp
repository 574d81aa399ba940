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

#include "quadsim/detection/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/Dense>

#include "quadsim/error.hpp"
#include "quadsim/optics/elements.hpp"

namespace quadsim::detection {

using fock::Amplitude;
using fock::FockState;
using fock::ModeId;
using fock::OccupationVector;

namespace {

// Polarization-resolved key of one term; the public label drops the
// polarization split for number-only detectors.
DetectionPattern fine_pattern(const OccupationVector& occ, const std::vector<int>& sorted,
                              std::vector<ModeId>& rest) {
  DetectionPattern p;
  for (int m : sorted) p.counts[m] = ModeCount{};
  for (const auto& mode : occ.photons()) {
    auto it = p.counts.find(mode.spatial);
    if (it == p.counts.end()) {
      rest.push_back(mode);
      continue;
    }
    ++it->second.total;
    if (mode.pol == fock::Pol::H)
      ++it->second.h;
    else
      ++it->second.v;
  }
  return p;
}

DetectionPattern coarse(DetectionPattern p) {
  p.resolving = Resolving::NumberOnly;
  for (auto& [m, c] : p.counts) c.h = c.v = 0;
  return p;
}

// Both unnormalized states describe the same ray.
bool parallel(const FockState& a, const FockState& b) {
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  return std::abs(std::abs(fock::inner_product(a, b)) - std::sqrt(na * nb)) < 1e-10 * std::max(1.0, na + nb);
}

}  // namespace

std::vector<RawBranch> split_by_pattern(const FockState& state, const std::vector<int>& measured,
                                        Resolving resolving) {
  for (int m : measured)
    if (!state.registry().contains_spatial(m))
      throw Error(ErrorKind::Mode, "measured mode " + fock::spatial_label(m) + " not in registry");
  std::vector<int> sorted = measured;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  auto reduced = fock::share(state.registry().without_spatial(sorted));
  std::map<DetectionPattern, std::vector<FockState::Term>> groups;
  for (const auto& [occ, amp] : state.terms()) {
    std::vector<ModeId> rest;
    DetectionPattern p = fine_pattern(occ, sorted, rest);
    groups[p].emplace_back(OccupationVector(std::move(rest)), amp);
  }
  std::vector<RawBranch> out;
  out.reserve(groups.size());
  for (auto& [p, terms] : groups) {
    FockState sub(reduced, std::move(terms), state.prune_eps());
    if (resolving == Resolving::PolarizationResolving) {
      out.push_back({p, std::move(sub)});
      continue;
    }
    const DetectionPattern label = coarse(p);
    auto same = std::find_if(out.begin(), out.end(), [&](const RawBranch& r) {
      return r.pattern == label && parallel(r.substate, sub);
    });
    if (same == out.end()) {
      out.push_back({label, std::move(sub)});
      continue;
    }
    // Equal rays: fold the weight into one pure component.
    const double total = same->substate.norm_squared() + sub.norm_squared();
    const double scale = std::sqrt(total / same->substate.norm_squared());
    same->substate = fock::scaled(same->substate, scale);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RawBranch& a, const RawBranch& b) { return a.pattern < b.pattern; });
  return out;
}

std::vector<OutcomeBranch> enumerate_outcomes(const FockState& state, const std::vector<int>& measured,
                                              Resolving resolving) {
  std::vector<OutcomeBranch> out;
  for (auto& raw : split_by_pattern(state, measured, resolving)) {
    const double p = raw.substate.norm_squared();
    if (p < kZeroProbability) continue;
    out.push_back({raw.pattern, p, fock::normalize(raw.substate)});
  }
  return out;
}

OutcomeBranch post_select(const FockState& state, const DetectionPattern& pattern) {
  std::vector<int> measured;
  for (const auto& [m, c] : pattern.counts) measured.push_back(m);
  std::optional<OutcomeBranch> found;
  for (auto& raw : split_by_pattern(state, measured, pattern.resolving)) {
    if (!(raw.pattern == pattern)) continue;
    const double p = raw.substate.norm_squared();
    if (p < kZeroProbability) continue;
    if (found)
      throw Error(ErrorKind::Precondition, "pattern " + to_string(pattern) + " leaves a mixed state");
    found = OutcomeBranch{pattern, p, fock::normalize(raw.substate)};
  }
  if (!found) return {pattern, 0.0, std::nullopt};
  return *found;
}

double MeasurementOperator::max_singular_value() const {
  std::vector<OccupationVector> ins;
  std::vector<OccupationVector> outs;
  auto index_of = [](std::vector<OccupationVector>& v, const OccupationVector& o) {
    auto it = std::find(v.begin(), v.end(), o);
    if (it != v.end()) return static_cast<int>(it - v.begin());
    v.push_back(o);
    return static_cast<int>(v.size() - 1);
  };
  for (const auto& t : terms) {
    index_of(ins, t.in);
    index_of(outs, t.out);
  }
  if (terms.empty()) return 0.0;
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(outs.size()), static_cast<Eigen::Index>(ins.size()));
  for (const auto& t : terms) k(index_of(outs, t.out), index_of(ins, t.in)) += t.coefficient;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k);
  return svd.singularValues()(0);
}

namespace {

KrausTerm diagonal(std::vector<ModeId> photons, double c) {
  OccupationVector occ(std::move(photons));
  return {occ, occ, Amplitude(c)};
}

void require_pair(int i, int j) {
  if (i == j) throw Error(ErrorKind::Parameter, "filter needs two distinct spatial modes");
}

}  // namespace

MeasurementOperator qf_operator(int i, int j) {
  require_pair(i, j);
  using fock::H;
  using fock::V;
  return {"qf",
          {i, j},
          {diagonal({H(i), H(j)}, 0.25), diagonal({V(i), V(j)}, 0.25), diagonal({V(j)}, 0.25),
           diagonal({V(i)}, 0.5), diagonal({}, 0.5)}};
}

MeasurementOperator mqf_operator(int i, int j) {
  require_pair(i, j);
  using fock::H;
  using fock::V;
  return {"mqf", {i, j}, {diagonal({H(i), H(j)}, 0.125), diagonal({V(i), V(j)}, 0.125), diagonal({}, 0.25)}};
}

FockState apply_kraus_raw(const FockState& state, const MeasurementOperator& op) {
  for (int s : op.spatial)
    if (!state.registry().contains_spatial(s))
      throw Error(ErrorKind::Mode, "filter mode " + fock::spatial_label(s) + " not in registry");
  auto acted = [&](const ModeId& m) {
    return std::find(op.spatial.begin(), op.spatial.end(), m.spatial) != op.spatial.end();
  };
  fock::StateAccumulator acc(state.registry_ptr());
  for (const auto& [occ, amp] : state.terms()) {
    std::vector<ModeId> local;
    std::vector<ModeId> rest;
    for (const auto& m : occ.photons()) (acted(m) ? local : rest).push_back(m);
    const OccupationVector local_occ(std::move(local));
    for (const auto& t : op.terms) {
      if (!(t.in == local_occ)) continue;
      std::vector<ModeId> photons = rest;
      photons.insert(photons.end(), t.out.photons().begin(), t.out.photons().end());
      acc.add(OccupationVector(std::move(photons)), amp * t.coefficient);
    }
  }
  return std::move(acc).finish(state.prune_eps());
}

OutcomeBranch apply_kraus(const FockState& state, const MeasurementOperator& op) {
  FockState raw = apply_kraus_raw(state, op);
  const double p = raw.norm_squared();
  OutcomeBranch b;
  b.pattern.resolving = Resolving::PolarizationResolving;
  b.probability = p;
  if (p >= kZeroProbability) b.post_state = fock::normalize(raw);
  return b;
}

namespace {

void require_one_photon(const FockState& state, int m) {
  for (const auto& [occ, amp] : state.terms())
    if (occ.count_spatial(m) != 1)
      throw Error(ErrorKind::Precondition, "fusion input mode " + fock::spatial_label(m) + " must hold exactly one photon");
}

}  // namespace

std::vector<FusionBranch> fusion_type1(const FockState& state, int m_a, int m_b) {
  require_one_photon(state, m_a);
  require_one_photon(state, m_b);
  FockState s = optics::apply(state, optics::pbs(m_a, m_b));
  s = optics::apply(s, optics::rotator(std::numbers::pi / 4, m_b));
  std::vector<FusionBranch> out;
  for (auto& b : enumerate_outcomes(s, {m_b}, Resolving::PolarizationResolving)) {
    const bool ok = b.pattern.total() == 1;
    out.push_back({std::move(b), ok});
  }
  return out;
}

std::vector<FusionBranch> fusion_type2(const FockState& state, int m_a, int m_b) {
  require_one_photon(state, m_a);
  require_one_photon(state, m_b);
  FockState s = optics::apply(state, optics::pbs(m_a, m_b));
  s = optics::apply(s, optics::rotator(std::numbers::pi / 4, m_a));
  s = optics::apply(s, optics::rotator(std::numbers::pi / 4, m_b));
  std::vector<FusionBranch> out;
  for (auto& b : enumerate_outcomes(s, {m_a, m_b}, Resolving::PolarizationResolving)) {
    const bool ok = b.pattern.total() == 2 && b.pattern.total_h() == 1 && b.pattern.total_v() == 1;
    out.push_back({std::move(b), ok});
  }
  return out;
}

}  // namespace quadsim::detection
