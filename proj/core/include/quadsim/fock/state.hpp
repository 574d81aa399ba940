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

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quadsim/fock/mode.hpp"

namespace quadsim::fock {

using Amplitude = std::complex<double>;

inline constexpr double kDefaultPruneEps = 1e-12;

// Occupation numbers stored as the sorted multiset of occupied modes, so
// |2H_1, V_4> is {1H, 1H, 4V}.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<ModeId> photons);
  static OccupationVector from_counts(const std::vector<std::pair<ModeId, int>>& counts);

  const std::vector<ModeId>& photons() const { return photons_; }
  int total() const { return static_cast<int>(photons_.size()); }
  bool empty() const { return photons_.empty(); }
  int count(ModeId mode) const;
  int count_spatial(int spatial) const;
  std::vector<std::pair<ModeId, int>> counts() const;

  OccupationVector with_added(ModeId mode) const;
  // Removes one photon from mode; the caller checks count(mode) > 0.
  OccupationVector with_removed(ModeId mode) const;

  // sqrt(prod_i n_i!)
  double sqrt_factorials() const;

  auto operator<=>(const OccupationVector&) const = default;

 private:
  std::vector<ModeId> photons_;
};

struct OccupationHash {
  std::size_t operator()(const OccupationVector& occ) const noexcept;
};

std::string to_string(const OccupationVector& occ);

// Immutable sparse superposition of occupation vectors. Terms are kept
// sorted by occupation vector.
class FockState {
 public:
  using Term = std::pair<OccupationVector, Amplitude>;

  FockState(RegistryPtr registry, std::vector<Term> terms, double prune_eps = kDefaultPruneEps);

  static FockState vacuum(RegistryPtr registry);
  static FockState zero(RegistryPtr registry);

  const Registry& registry() const { return *registry_; }
  const RegistryPtr& registry_ptr() const { return registry_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  double prune_eps() const { return prune_eps_; }

  Amplitude amplitude(const OccupationVector& occ) const;
  double norm_squared() const;
  // Photon number if every term carries the same total.
  std::optional<int> photon_number() const;
  int max_photon_number() const;

 private:
  RegistryPtr registry_;
  std::vector<Term> terms_;
  double prune_eps_ = kDefaultPruneEps;
};

// Hash-map accumulator used by every operation that produces a new state.
class StateAccumulator {
 public:
  explicit StateAccumulator(RegistryPtr registry) : registry_(std::move(registry)) {}

  void add(const OccupationVector& occ, Amplitude amp) { terms_[occ] += amp; }
  void add(OccupationVector&& occ, Amplitude amp) { terms_[std::move(occ)] += amp; }
  void reserve(std::size_t n) { terms_.reserve(n); }

  FockState finish(double prune_eps = kDefaultPruneEps) &&;

 private:
  RegistryPtr registry_;
  std::unordered_map<OccupationVector, Amplitude, OccupationHash> terms_;
};

void require_same_registry(const FockState& a, const FockState& b);

FockState create(const FockState& state, ModeId mode);
FockState annihilate(const FockState& state, ModeId mode);
FockState superpose(const std::vector<std::pair<Amplitude, FockState>>& pairs);
FockState scaled(const FockState& state, Amplitude factor);
Amplitude inner_product(const FockState& a, const FockState& b);
double norm(const FockState& state);
FockState normalize(const FockState& state);
FockState prune(const FockState& state, double eps, bool renormalize = false);
// Same terms on a larger registry that contains every occupied mode.
FockState rehome(const FockState& state, RegistryPtr registry);
// Product of states on disjoint registries.
FockState tensor(const FockState& a, const FockState& b);

// Ket-style rendering, e.g. "+0.5|1H 3H> -0.5|1V 3V>".
std::string to_string(const FockState& state, int precision = 6);

struct DumpRecord {
  struct Occupation {
    int spatial;
    char pol;
    int count;
  };
  std::vector<Occupation> occupations;
  double re;
  double im;
};

std::vector<DumpRecord> dump(const FockState& state);

}  // namespace quadsim::fock
