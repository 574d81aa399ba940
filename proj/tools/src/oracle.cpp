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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace quadsim::tools {

using fock::Amplitude;
using fock::FockState;
using fock::ModeId;
using fock::OccupationVector;

std::complex<double> permanent(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1.0;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> sum = 0.0;
  do {
    std::complex<double> prod = 1.0;
    for (int r = 0; r < n; ++r) prod *= m(r, perm[static_cast<std::size_t>(r)]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

namespace {

// All multisets of size n drawn from {0..m-1}, as non-decreasing index lists.
void multisets(int n, int m, int start, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == n) {
    out.push_back(current);
    return;
  }
  for (int k = start; k < m; ++k) {
    current.push_back(k);
    multisets(n, m, k, current, out);
    current.pop_back();
  }
}

double factorial_product(const std::vector<int>& indices) {
  std::map<int, int> counts;
  for (int i : indices) ++counts[i];
  double p = 1.0;
  for (const auto& [i, c] : counts) p *= std::tgamma(c + 1.0);
  return p;
}

}  // namespace

FockState dense_apply(const FockState& state, const optics::ModeUnitary& unitary) {
  const int m = static_cast<int>(unitary.modes.size());
  std::map<int, std::vector<std::vector<int>>> outputs_by_n;
  fock::StateAccumulator acc(state.registry_ptr());
  for (const auto& [occ, amp] : state.terms()) {
    std::vector<int> in;
    std::vector<ModeId> spectators;
    for (const ModeId& mode : occ.photons()) {
      auto it = std::find(unitary.modes.begin(), unitary.modes.end(), mode);
      if (it == unitary.modes.end())
        spectators.push_back(mode);
      else
        in.push_back(static_cast<int>(it - unitary.modes.begin()));
    }
    const int n = static_cast<int>(in.size());
    auto& outs = outputs_by_n[n];
    if (outs.empty()) {
      std::vector<int> current;
      multisets(n, m, 0, current, outs);
    }
    const double in_norm = factorial_product(in);
    for (const auto& out : outs) {
      Eigen::MatrixXcd sub(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          sub(r, c) = unitary.matrix(out[static_cast<std::size_t>(r)], in[static_cast<std::size_t>(c)]);
      const Amplitude a = permanent(sub) / std::sqrt(in_norm * factorial_product(out));
      if (std::abs(a) == 0.0) continue;
      std::vector<ModeId> photons = spectators;
      for (int k : out) photons.push_back(unitary.modes[static_cast<std::size_t>(k)]);
      acc.add(OccupationVector(std::move(photons)), amp * a);
    }
  }
  return std::move(acc).finish();
}

FockState random_state(fock::RegistryPtr registry, int photons, int terms, std::mt19937& rng) {
  const auto& modes = registry->modes();
  std::uniform_int_distribution<std::size_t> pick(0, modes.size() - 1);
  std::normal_distribution<double> gauss;
  fock::StateAccumulator acc(registry);
  for (int t = 0; t < terms; ++t) {
    std::vector<ModeId> occ;
    for (int p = 0; p < photons; ++p) occ.push_back(modes[pick(rng)]);
    acc.add(OccupationVector(std::move(occ)), Amplitude(gauss(rng), gauss(rng)));
  }
  return fock::normalize(std::move(acc).finish());
}

double max_difference(const FockState& a, const FockState& b) {
  double worst = 0.0;
  for (const auto& [occ, amp] : a.terms()) worst = std::max(worst, std::abs(amp - b.amplitude(occ)));
  for (const auto& [occ, amp] : b.terms()) worst = std::max(worst, std::abs(amp - a.amplitude(occ)));
  return worst;
}

}  // namespace quadsim::tools
