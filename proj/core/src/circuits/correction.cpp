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

#include "quadsim/circuits/correction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <sstream>

#include "quadsim/circuits/states.hpp"
#include "quadsim/error.hpp"

namespace quadsim::circuits {

using fock::Amplitude;
using fock::FockState;
using fock::ModeId;
using optics::Element;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFidelityTol = 1e-9;
constexpr double kSupportTol = 1e-7;

QuadbitCodec codec(const std::vector<int>& m, std::size_t k) { return {m[2 * k], m[2 * k + 1]}; }

PhotonAmplitudes single(ModeId m) { return {{{m, Amplitude(1.0)}}}; }

}  // namespace

FockState target_state(const TargetSpec& target, fock::RegistryPtr registry) {
  const auto& m = target.modes;
  if (m.size() != target_arity(target.family))
    throw Error(ErrorKind::Configuration, "target " + to_string(target.family) + " has the wrong mode count");
  switch (target.family) {
    case TargetFamily::Bell: return bell_phi_plus(m[0], m[1], registry);
    case TargetFamily::Bell2: {
      std::vector<std::pair<Amplitude, std::vector<PhotonAmplitudes>>> terms;
      for (auto p : {fock::Pol::H, fock::Pol::V})
        for (auto q : {fock::Pol::H, fock::Pol::V})
          terms.push_back({0.5, {single({m[0], p}), single({m[1], p}), single({m[2], q}), single({m[3], q})}});
      return photon_superposition(terms, registry);
    }
    case TargetFamily::Ghz3:
    case TargetFamily::Ghz4: return ghz(m, registry);
    case TargetFamily::Hes:
    case TargetFamily::HesAny: return hes(m[0], m[1], m[2], m[3], registry);
    case TargetFamily::Qdc3: return qdc3(codec(m, 0), codec(m, 1), codec(m, 2), registry);
    case TargetFamily::Qdc3Prime: return qdc3_prime(codec(m, 0), codec(m, 1), codec(m, 2), registry);
    case TargetFamily::Qdc4: return qdc4_star(codec(m, 0), codec(m, 1), codec(m, 2), codec(m, 3), registry);
    case TargetFamily::Qdc4Prime: return qdc4_prime(codec(m, 0), codec(m, 1), codec(m, 2), codec(m, 3), registry);
  }
  throw Error(ErrorKind::Configuration, "unknown target family");
}

std::vector<TargetSpec> target_candidates(const TargetSpec& target) {
  if (target.family != TargetFamily::HesAny) return {target};
  const auto& m = target.modes;
  std::vector<TargetSpec> out;
  for (const auto& order : {std::vector<int>{m[0], m[1], m[2], m[3]}, std::vector<int>{m[0], m[2], m[1], m[3]},
                            std::vector<int>{m[0], m[3], m[1], m[2]}})
    out.push_back({TargetFamily::Hes, order, target.strict});
  return out;
}

std::vector<Element> correction_dictionary(const TargetSpec& target) {
  const auto& m = target.modes;
  std::vector<Element> out;
  auto bell_pair = [&](int a, int b) {
    out.push_back(optics::beam_splitter(0.5, a, b));
    out.push_back(optics::beam_splitter(0.5, b, a));
    out.push_back(optics::pbs(a, b));
    for (int x : {a, b}) {
      out.push_back(optics::rotator(kPi / 4, x));
      out.push_back(optics::rotator(-kPi / 4, x));
    }
  };
  auto photon_pair = [&](int x, int y, bool fourier) {
    if (fourier) {
      out.push_back(optics::quadbit_fourier(x, y));
      out.push_back(optics::inverse_quadbit_fourier(x, y));
    } else {
      out.push_back(optics::beam_splitter(0.5, x, y));
      out.push_back(optics::beam_splitter(0.5, y, x));
    }
    out.push_back(optics::beam_splitter(1.0, x, y));
    out.push_back(optics::pbs(x, y));
    out.push_back(optics::rotator(kPi / 2, x));
    out.push_back(optics::rotator(kPi / 2, y));
  };
  switch (target.family) {
    case TargetFamily::Bell: bell_pair(m[0], m[1]); break;
    case TargetFamily::Bell2:
      bell_pair(m[0], m[1]);
      bell_pair(m[2], m[3]);
      break;
    case TargetFamily::Ghz3:
    case TargetFamily::Ghz4:
      for (int x : m) {
        out.push_back(optics::rotator(kPi / 4, x));
        out.push_back(optics::rotator(-kPi / 4, x));
        out.push_back(optics::rotator(kPi / 2, x));
      }
      break;
    case TargetFamily::Hes:
    case TargetFamily::HesAny:
      photon_pair(m[0], m[1], false);
      photon_pair(m[2], m[3], false);
      break;
    case TargetFamily::Qdc3:
    case TargetFamily::Qdc3Prime:
    case TargetFamily::Qdc4:
    case TargetFamily::Qdc4Prime:
      for (std::size_t k = 0; k + 1 < m.size(); k += 2) photon_pair(m[k], m[k + 1], true);
      break;
  }
  return out;
}

namespace {

// <a|b> matching terms by occupation only.
Amplitude overlap(const FockState& a, const FockState& b) {
  Amplitude sum = 0.0;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += std::conj(ia->second) * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

bool registry_has(const FockState& state, const std::vector<Element>& elements) {
  for (const auto& e : elements)
    for (int s : e.spatial)
      if (!state.registry().contains_spatial(s)) return false;
  return true;
}

}  // namespace

FidelityReport fidelity_report(const FockState& state, const FockState& target, const std::vector<Element>& corrections) {
  FidelityReport r;
  const auto ns = state.photon_number();
  const auto nt = target.photon_number();
  if (ns && nt && *ns != *nt) {
    r.diagnostic = "photon number " + std::to_string(*ns) + " against target " + std::to_string(*nt);
    return r;
  }
  if (!registry_has(state, corrections)) {
    r.diagnostic = "correction acts on modes outside the state";
    return r;
  }
  const FockState corrected = optics::apply(state, corrections);
  const double na = corrected.norm_squared();
  const double nb = target.norm_squared();
  if (na <= 0.0 || nb <= 0.0) {
    r.diagnostic = "empty state";
    return r;
  }
  r.value = std::norm(overlap(target, corrected)) / (na * nb);
  return r;
}

double fidelity(const FockState& state, const FockState& target, const std::vector<Element>& corrections) {
  return fidelity_report(state, target, corrections).value;
}

const Correction* CorrectionCache::find(const std::string& key) const {
  auto it = results_.find(key);
  return it == results_.end() ? nullptr : &it->second;
}

void CorrectionCache::store(const std::string& key, Correction correction) {
  results_.insert_or_assign(key, std::move(correction));
}

const std::vector<std::vector<Element>>& CorrectionCache::hints(const std::string& shape) const {
  static const std::vector<std::vector<Element>> kNone;
  auto it = hints_.find(shape);
  return it == hints_.end() ? kNone : it->second;
}

void CorrectionCache::add_hint(const std::string& shape, std::vector<Element> word) {
  auto& list = hints_[shape];
  if (std::find(list.begin(), list.end(), word) == list.end()) list.push_back(std::move(word));
}

namespace {

// Finds x_m in Z4 with phase(i^x) * phi = c * target for one global c, when
// both states have the same support and magnitudes.
class PhaseSolver {
 public:
  PhaseSolver(const FockState& phi, const FockState& target) : phi_(phi), target_(target) {}

  std::optional<std::vector<Element>> solve() {
    if (!build()) return std::nullopt;
    values_.assign(modes_.size(), -1);
    nodes_ = 0;
    if (!search()) return std::nullopt;
    return elements();
  }

 private:
  struct Constraint {
    std::vector<std::pair<std::size_t, int>> coeffs;  // mode index, multiplicity difference
    int rhs = 0;
  };

  static std::vector<std::pair<fock::OccupationVector, Amplitude>> support(const FockState& s) {
    const double n = std::sqrt(s.norm_squared());
    std::vector<std::pair<fock::OccupationVector, Amplitude>> out;
    for (const auto& [occ, a] : s.terms())
      if (std::abs(a) / n > kSupportTol) out.emplace_back(occ, a / n);
    return out;
  }

  bool build() {
    const auto a = support(phi_);
    const auto b = support(target_);
    if (a.size() != b.size() || a.empty()) return false;
    std::set<ModeId> modes;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].first != b[k].first) return false;
      if (std::abs(std::abs(a[k].second) - std::abs(b[k].second)) > 1e-6) return false;
      for (const auto& [m, c] : a[k].first.counts()) modes.insert(m);
    }
    modes_.assign(modes.begin(), modes.end());
    auto index = [&](ModeId m) {
      return static_cast<std::size_t>(std::lower_bound(modes_.begin(), modes_.end(), m) - modes_.begin());
    };
    const Amplitude r0 = b[0].second / a[0].second;
    const auto base = a[0].first.counts();
    constraints_.clear();
    for (std::size_t k = 1; k < a.size(); ++k) {
      const Amplitude rk = (b[k].second / a[k].second) / r0;
      const double quarter = std::arg(rk) / (kPi / 2);
      const double rounded = std::round(quarter);
      if (std::abs(quarter - rounded) > 1e-6) return false;
      Constraint c;
      c.rhs = ((static_cast<int>(rounded) % 4) + 4) % 4;
      std::vector<int> diff(modes_.size(), 0);
      for (const auto& [m, n] : a[k].first.counts()) diff[index(m)] += n;
      for (const auto& [m, n] : base) diff[index(m)] -= n;
      for (std::size_t i = 0; i < diff.size(); ++i) {
        const int d = ((diff[i] % 4) + 4) % 4;
        if (d != 0) c.coeffs.emplace_back(i, d);
      }
      if (c.coeffs.empty()) {
        if (c.rhs != 0) return false;
        continue;
      }
      constraints_.push_back(std::move(c));
    }
    return true;
  }

  // 0 satisfied or open, -1 violated; sets `forced` to a mode index and value
  // when exactly one odd-coefficient mode remains.
  bool propagate(std::vector<std::pair<std::size_t, int>>& assigned) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : constraints_) {
        int sum = 0;
        int open = 0;
        std::size_t last = 0;
        int last_coeff = 0;
        for (const auto& [i, d] : c.coeffs) {
          if (values_[i] < 0) {
            ++open;
            last = i;
            last_coeff = d;
          } else {
            sum += d * values_[i];
          }
        }
        const int need = (((c.rhs - sum) % 4) + 4) % 4;
        if (open == 0) {
          if (need != 0) return false;
        } else if (open == 1 && last_coeff % 2 == 1) {
          // d is 1 or 3, both invertible mod 4 and self-inverse.
          values_[last] = (need * last_coeff) % 4;
          assigned.emplace_back(last, values_[last]);
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    if (++nodes_ > 200000) return false;
    std::vector<std::pair<std::size_t, int>> assigned;
    auto undo = [&] {
      for (const auto& [i, v] : assigned) values_[i] = -1;
    };
    if (!propagate(assigned)) {
      undo();
      return false;
    }
    std::size_t next = values_.size();
    for (const auto& c : constraints_) {
      for (const auto& [i, d] : c.coeffs) {
        if (values_[i] < 0) {
          next = i;
          break;
        }
      }
      if (next != values_.size()) break;
    }
    if (next == values_.size()) {
      for (auto& v : values_)
        if (v < 0) v = 0;
      return true;
    }
    for (int v = 0; v < 4; ++v) {
      values_[next] = v;
      if (search()) return true;
    }
    values_[next] = -1;
    undo();
    return false;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
      const int v = values_[i];
      if (v <= 0) continue;
      const ModeId m = modes_[i];
      if (m.pol == fock::Pol::V && i > 0 && modes_[i - 1].spatial == m.spatial && values_[i - 1] == v) continue;
      const bool whole = m.pol == fock::Pol::H && i + 1 < modes_.size() && modes_[i + 1].spatial == m.spatial &&
                         values_[i + 1] == v;
      out.push_back(optics::phase(v * kPi / 2, m.spatial, whole ? std::nullopt : std::optional<fock::Pol>(m.pol)));
    }
    return out;
  }

  const FockState& phi_;
  const FockState& target_;
  std::vector<ModeId> modes_;
  std::vector<Constraint> constraints_;
  std::vector<int> values_;
  long nodes_ = 0;
};

std::string shape_key(const FockState& s, const std::string& target) {
  std::ostringstream os;
  os << target << '|';
  const double n = std::sqrt(s.norm_squared());
  for (const auto& [occ, a] : s.terms()) os << fock::to_string(occ) << ':' << std::lround(std::abs(a) / n * 1e6) << ';';
  return os.str();
}

std::string state_key(const FockState& s, const std::string& target) {
  std::ostringstream os;
  os << target << '|';
  const double n = std::sqrt(s.norm_squared());
  for (const auto& [occ, a] : s.terms())
    os << fock::to_string(occ) << ':' << std::lround(a.real() / n * 1e7) << ',' << std::lround(a.imag() / n * 1e7)
       << ';';
  return os.str();
}

bool same_modes_inverse(const Element& a, const Element& b) {
  if (a.acted_modes() != b.acted_modes()) return false;
  const auto ua = a.unitary().matrix;
  const auto ub = b.unitary().matrix;
  return (ub * ua - Eigen::MatrixXcd::Identity(ua.rows(), ua.cols())).cwiseAbs().maxCoeff() < 1e-12;
}

bool disjoint(const Element& a, const Element& b) {
  for (int x : a.spatial)
    if (std::find(b.spatial.begin(), b.spatial.end(), x) != b.spatial.end()) return false;
  return true;
}

class WordSearch {
 public:
  WordSearch(const FockState& target, std::vector<Element> gens) : target_(target), gens_(std::move(gens)) {
    const std::size_t n = gens_.size();
    skip_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        skip_[i][j] = same_modes_inverse(gens_[i], gens_[j]) || (disjoint(gens_[i], gens_[j]) && j < i);
  }

  // Tries a fixed word; returns the full correction on success.
  std::optional<std::vector<Element>> attempt(const FockState& psi, const std::vector<Element>& word) const {
    return finish(optics::apply(psi, word), word);
  }

  std::optional<std::vector<Element>> run(const FockState& psi, int length) {
    word_.clear();
    return extend(psi, length, gens_.size());
  }

 private:
  std::optional<std::vector<Element>> finish(const FockState& phi, const std::vector<Element>& word) const {
    PhaseSolver solver(phi, target_);
    auto phases = solver.solve();
    if (!phases) return std::nullopt;
    std::vector<Element> full = word;
    full.insert(full.end(), phases->begin(), phases->end());
    return full;
  }

  std::optional<std::vector<Element>> extend(const FockState& phi, int remaining, std::size_t prev) {
    if (remaining == 0) return finish(phi, word_);
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      if (prev < gens_.size() && skip_[prev][g]) continue;
      word_.push_back(gens_[g]);
      auto r = extend(optics::apply(phi, gens_[g]), remaining - 1, g);
      word_.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  }

  const FockState& target_;
  std::vector<Element> gens_;
  std::vector<std::vector<bool>> skip_;
  std::vector<Element> word_;
};

}  // namespace

Correction find_correction(const FockState& state, const TargetSpec& target, int max_length,
                           CorrectionCache* cache) {
  const std::string label = to_string(target);
  std::string key;
  if (cache) {
    key = state_key(state, label) + std::to_string(max_length);
    if (const Correction* hit = cache->find(key)) return *hit;
  }
  const std::string shape = cache ? shape_key(state, label) : std::string();

  Correction best;
  best.matched = target;
  for (const TargetSpec& candidate : target_candidates(target)) {
    bool in_registry = true;
    for (int m : candidate.modes) in_registry = in_registry && state.registry().contains_spatial(m);
    if (!in_registry) continue;
    const FockState goal = target_state(candidate, state.registry_ptr());
    const double direct = fidelity(state, goal);
    if (direct > best.fidelity) {
      best.fidelity = direct;
      best.matched = candidate;
    }
    if (direct >= 1.0 - kFidelityTol) {
      best = {true, direct, {}, candidate};
      break;
    }
    WordSearch search(goal, correction_dictionary(candidate));
    std::optional<std::vector<Element>> found;
    if (cache) {
      for (const auto& word : cache->hints(shape + to_string(candidate))) {
        found = search.attempt(state, word);
        if (found) break;
      }
    }
    for (int len = 0; !found && len <= max_length; ++len) found = search.run(state, len);
    if (found) {
      const double f = fidelity(state, goal, *found);
      if (f >= 1.0 - kFidelityTol) {
        if (cache) {
          std::vector<Element> word;
          for (const auto& e : *found)
            if (e.kind != optics::ElementKind::Phase) word.push_back(e);
          cache->add_hint(shape + to_string(candidate), std::move(word));
        }
        best = {true, f, *found, candidate};
        break;
      }
    }
  }
  if (cache) cache->store(key, best);
  return best;
}

}  // namespace quadsim::circuits
