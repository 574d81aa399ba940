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

#include "quadsim/fock/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "quadsim/error.hpp"

namespace quadsim::fock {

OccupationVector::OccupationVector(std::vector<ModeId> photons) : photons_(std::move(photons)) {
  std::sort(photons_.begin(), photons_.end());
}

OccupationVector OccupationVector::from_counts(const std::vector<std::pair<ModeId, int>>& counts) {
  std::vector<ModeId> photons;
  for (const auto& [mode, n] : counts) {
    if (n < 0) throw Error(ErrorKind::Parameter, "negative occupation count");
    photons.insert(photons.end(), static_cast<std::size_t>(n), mode);
  }
  return OccupationVector(std::move(photons));
}

int OccupationVector::count(ModeId mode) const {
  auto [lo, hi] = std::equal_range(photons_.begin(), photons_.end(), mode);
  return static_cast<int>(hi - lo);
}

int OccupationVector::count_spatial(int spatial) const { return count(H(spatial)) + count(V(spatial)); }

std::vector<std::pair<ModeId, int>> OccupationVector::counts() const {
  std::vector<std::pair<ModeId, int>> out;
  for (const auto& m : photons_) {
    if (!out.empty() && out.back().first == m)
      ++out.back().second;
    else
      out.emplace_back(m, 1);
  }
  return out;
}

OccupationVector OccupationVector::with_added(ModeId mode) const {
  OccupationVector out;
  out.photons_.reserve(photons_.size() + 1);
  auto pos = std::upper_bound(photons_.begin(), photons_.end(), mode);
  out.photons_.insert(out.photons_.end(), photons_.begin(), pos);
  out.photons_.push_back(mode);
  out.photons_.insert(out.photons_.end(), pos, photons_.end());
  return out;
}

OccupationVector OccupationVector::with_removed(ModeId mode) const {
  OccupationVector out = *this;
  auto pos = std::lower_bound(out.photons_.begin(), out.photons_.end(), mode);
  if (pos == out.photons_.end() || *pos != mode) throw Error(ErrorKind::Mode, "no photon to remove");
  out.photons_.erase(pos);
  return out;
}

double OccupationVector::sqrt_factorials() const {
  double f = 1.0;
  for (const auto& [mode, n] : counts())
    for (int k = 2; k <= n; ++k) f *= k;
  return std::sqrt(f);
}

std::size_t OccupationHash::operator()(const OccupationVector& occ) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto& m : occ.photons()) {
    h ^= static_cast<std::size_t>(m.spatial * 2 + static_cast<int>(m.pol)) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_string(const OccupationVector& occ) {
  std::string out;
  for (const auto& [mode, n] : occ.counts()) {
    if (!out.empty()) out += ' ';
    if (n > 1) out += std::to_string(n) + "*";
    out += to_string(mode);
  }
  return out.empty() ? std::string("vac") : out;
}

FockState::FockState(RegistryPtr registry, std::vector<Term> terms, double prune_eps)
    : registry_(std::move(registry)), prune_eps_(prune_eps) {
  if (!registry_) throw Error(ErrorKind::Configuration, "state without registry");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first)
      terms_.back().second += t.second;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [&](const Term& t) { return std::abs(t.second) < prune_eps_; });
  for (const auto& t : terms_)
    for (const auto& m : t.first.photons())
      if (!registry_->contains(m)) throw Error(ErrorKind::Mode, "mode " + to_string(m) + " not in registry");
}

FockState FockState::vacuum(RegistryPtr registry) {
  if (!registry || registry->empty()) throw Error(ErrorKind::Configuration, "vacuum needs a nonempty registry");
  return FockState(std::move(registry), {{OccupationVector{}, Amplitude(1.0)}});
}

FockState FockState::zero(RegistryPtr registry) { return FockState(std::move(registry), {}); }

Amplitude FockState::amplitude(const OccupationVector& occ) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), occ,
                             [](const Term& t, const OccupationVector& o) { return t.first < o; });
  if (it != terms_.end() && it->first == occ) return it->second;
  return {0.0, 0.0};
}

double FockState::norm_squared() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::norm(t.second);
  return s;
}

std::optional<int> FockState::photon_number() const {
  if (terms_.empty()) return std::nullopt;
  int n = terms_.front().first.total();
  for (const auto& t : terms_)
    if (t.first.total() != n) return std::nullopt;
  return n;
}

int FockState::max_photon_number() const {
  int n = 0;
  for (const auto& t : terms_) n = std::max(n, t.first.total());
  return n;
}

FockState StateAccumulator::finish(double prune_eps) && {
  std::vector<FockState::Term> terms;
  terms.reserve(terms_.size());
  for (auto& [occ, amp] : terms_) terms.emplace_back(occ, amp);
  return FockState(std::move(registry_), std::move(terms), prune_eps);
}

void require_same_registry(const FockState& a, const FockState& b) {
  if (a.registry_ptr() != b.registry_ptr() && a.registry() != b.registry())
    throw Error(ErrorKind::Registry, "states live on different mode registries");
}

FockState create(const FockState& state, ModeId mode) {
  if (!state.registry().contains(mode)) throw Error(ErrorKind::Mode, "unknown mode " + to_string(mode));
  std::vector<FockState::Term> terms;
  terms.reserve(state.size());
  for (const auto& [occ, amp] : state.terms()) {
    const int n = occ.count(mode);
    terms.emplace_back(occ.with_added(mode), amp * std::sqrt(static_cast<double>(n + 1)));
  }
  return FockState(state.registry_ptr(), std::move(terms), state.prune_eps());
}

FockState annihilate(const FockState& state, ModeId mode) {
  if (!state.registry().contains(mode)) throw Error(ErrorKind::Mode, "unknown mode " + to_string(mode));
  std::vector<FockState::Term> terms;
  for (const auto& [occ, amp] : state.terms()) {
    const int n = occ.count(mode);
    if (n == 0) continue;
    terms.emplace_back(occ.with_removed(mode), amp * std::sqrt(static_cast<double>(n)));
  }
  return FockState(state.registry_ptr(), std::move(terms), state.prune_eps());
}

FockState superpose(const std::vector<std::pair<Amplitude, FockState>>& pairs) {
  if (pairs.empty()) throw Error(ErrorKind::Configuration, "superpose of nothing");
  const FockState& first = pairs.front().second;
  StateAccumulator acc(first.registry_ptr());
  for (const auto& [c, s] : pairs) {
    require_same_registry(first, s);
    for (const auto& [occ, amp] : s.terms()) acc.add(occ, c * amp);
  }
  return std::move(acc).finish(first.prune_eps());
}

FockState scaled(const FockState& state, Amplitude factor) {
  std::vector<FockState::Term> terms = state.terms();
  for (auto& t : terms) t.second *= factor;
  return FockState(state.registry_ptr(), std::move(terms), state.prune_eps());
}

Amplitude inner_product(const FockState& a, const FockState& b) {
  require_same_registry(a, b);
  Amplitude s{0.0, 0.0};
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      s += std::conj(ia->second) * ib->second;
      ++ia;
      ++ib;
    }
  }
  return s;
}

double norm(const FockState& state) { return std::sqrt(state.norm_squared()); }

FockState normalize(const FockState& state) {
  const double n = norm(state);
  if (n < 1e-12) throw Error(ErrorKind::DegenerateState, "cannot normalize a zero state");
  return scaled(state, Amplitude(1.0 / n));
}

FockState prune(const FockState& state, double eps, bool renormalize) {
  FockState out(state.registry_ptr(), state.terms(), eps);
  return renormalize ? normalize(out) : out;
}

FockState rehome(const FockState& state, RegistryPtr registry) {
  return FockState(std::move(registry), state.terms(), state.prune_eps());
}

FockState tensor(const FockState& a, const FockState& b) {
  for (const auto& m : b.registry().modes())
    if (a.registry().contains(m)) throw Error(ErrorKind::Registry, "tensor of overlapping registries");
  auto reg = share(a.registry().merged(b.registry()));
  std::vector<FockState::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [oa, xa] : a.terms()) {
    for (const auto& [ob, xb] : b.terms()) {
      std::vector<ModeId> photons = oa.photons();
      photons.insert(photons.end(), ob.photons().begin(), ob.photons().end());
      terms.emplace_back(OccupationVector(std::move(photons)), xa * xb);
    }
  }
  return FockState(std::move(reg), std::move(terms), std::min(a.prune_eps(), b.prune_eps()));
}

std::string to_string(const FockState& state, int precision) {
  if (state.empty()) return "0";
  std::ostringstream os;
  os.precision(precision);
  bool first = true;
  for (const auto& [occ, amp] : state.terms()) {
    if (!first) os << ' ';
    first = false;
    if (std::abs(amp.imag()) < 1e-15) {
      os << std::showpos << amp.real() << std::noshowpos;
    } else {
      os << '(' << amp.real() << std::showpos << amp.imag() << std::noshowpos << "i)";
    }
    os << '|' << to_string(occ) << '>';
  }
  return os.str();
}

std::vector<DumpRecord> dump(const FockState& state) {
  std::vector<DumpRecord> out;
  out.reserve(state.size());
  for (const auto& [occ, amp] : state.terms()) {
    DumpRecord r;
    for (const auto& [mode, n] : occ.counts()) r.occupations.push_back({mode.spatial, to_char(mode.pol), n});
    r.re = amp.real();
    r.im = amp.imag();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace quadsim::fock
