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

#include "quadsim/fock/mode.hpp"

#include <algorithm>
#include <set>

#include "quadsim/error.hpp"

namespace quadsim::fock {

char to_char(Pol pol) { return pol == Pol::H ? 'H' : 'V'; }

std::string spatial_label(int spatial) {
  if (is_primed(spatial)) return std::to_string(spatial - kPrimedOffset) + "'";
  return std::to_string(spatial);
}

std::string to_string(ModeId mode) { return spatial_label(mode.spatial) + to_char(mode.pol); }

Registry::Registry(std::vector<ModeId> modes) : modes_(std::move(modes)) {
  std::sort(modes_.begin(), modes_.end());
  if (std::adjacent_find(modes_.begin(), modes_.end()) != modes_.end())
    throw Error(ErrorKind::Registry, "duplicate mode in registry");
  for (const auto& m : modes_)
    if (m.spatial < 0) throw Error(ErrorKind::Registry, "negative spatial label");
}

Registry Registry::from_spatial(const std::vector<int>& spatial_modes) {
  std::vector<ModeId> modes;
  modes.reserve(spatial_modes.size() * 2);
  for (int s : spatial_modes) {
    modes.push_back(H(s));
    modes.push_back(V(s));
  }
  return Registry(std::move(modes));
}

std::vector<int> Registry::spatial_modes() const {
  std::vector<int> out;
  for (const auto& m : modes_)
    if (out.empty() || out.back() != m.spatial) out.push_back(m.spatial);
  return out;
}

bool Registry::contains(ModeId mode) const {
  return std::binary_search(modes_.begin(), modes_.end(), mode);
}

bool Registry::contains_spatial(int spatial) const {
  return contains(H(spatial)) || contains(V(spatial));
}

Registry Registry::without_spatial(const std::vector<int>& spatial_modes) const {
  std::set<int> drop(spatial_modes.begin(), spatial_modes.end());
  std::vector<ModeId> kept;
  for (const auto& m : modes_)
    if (!drop.count(m.spatial)) kept.push_back(m);
  return Registry(std::move(kept));
}

Registry Registry::merged(const Registry& other) const {
  std::vector<ModeId> all;
  std::set_union(modes_.begin(), modes_.end(), other.modes_.begin(), other.modes_.end(),
                 std::back_inserter(all));
  return Registry(std::move(all));
}

RegistryPtr make_registry(int n, int primed_count) {
  std::vector<int> spatial;
  for (int k = 1; k <= n; ++k) spatial.push_back(k);
  for (int k = 1; k <= primed_count; ++k) spatial.push_back(primed(k));
  return share(Registry::from_spatial(spatial));
}

RegistryPtr share(Registry registry) { return std::make_shared<const Registry>(std::move(registry)); }

}  // namespace quadsim::fock
