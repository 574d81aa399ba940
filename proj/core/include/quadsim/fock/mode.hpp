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

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace quadsim::fock {

enum class Pol : std::uint8_t { H = 0, V = 1 };

// Primed spatial mode k' is stored as k + kPrimedOffset.
inline constexpr int kPrimedOffset = 100;

constexpr int primed(int k) { return k + kPrimedOffset; }
constexpr bool is_primed(int spatial) { return spatial > kPrimedOffset; }

struct ModeId {
  int spatial = 0;
  Pol pol = Pol::H;

  auto operator<=>(const ModeId&) const = default;
};

constexpr ModeId H(int spatial) { return {spatial, Pol::H}; }
constexpr ModeId V(int spatial) { return {spatial, Pol::V}; }

char to_char(Pol pol);

// "3", "3'" for primed modes.
std::string spatial_label(int spatial);
// "3H", "3'V".
std::string to_string(ModeId mode);

// Sorted set of polarization-spatial modes a state lives on.
class Registry {
 public:
  Registry() = default;
  explicit Registry(std::vector<ModeId> modes);

  // Both polarizations of every listed spatial mode.
  static Registry from_spatial(const std::vector<int>& spatial_modes);

  const std::vector<ModeId>& modes() const { return modes_; }
  std::vector<int> spatial_modes() const;
  bool empty() const { return modes_.empty(); }
  std::size_t size() const { return modes_.size(); }
  bool contains(ModeId mode) const;
  bool contains_spatial(int spatial) const;

  Registry without_spatial(const std::vector<int>& spatial_modes) const;
  Registry merged(const Registry& other) const;

  bool operator==(const Registry&) const = default;

 private:
  std::vector<ModeId> modes_;
};

using RegistryPtr = std::shared_ptr<const Registry>;

// Spatial modes 1..n and 1'..p'.
RegistryPtr make_registry(int n, int primed_count = 0);
RegistryPtr share(Registry registry);

}  // namespace quadsim::fock
