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

#include "quadsim/circuits/states.hpp"

#include <cmath>
#include <complex>

#include "quadsim/error.hpp"

namespace quadsim::circuits {

using fock::Amplitude;

std::array<ModeId, 4> QuadbitCodec::levels() const {
  return {fock::H(first), fock::V(first), fock::H(second), fock::V(second)};
}

FockState QuadbitCodec::encode(int level, RegistryPtr registry) const {
  if (level < 0 || level > 3) throw Error(ErrorKind::Encoding, "quadbit level outside 0..3");
  return fock::create(FockState::vacuum(std::move(registry)), levels()[static_cast<std::size_t>(level)]);
}

Eigen::Vector4cd QuadbitCodec::decode(const FockState& state) const {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  const auto lv = levels();
  for (const auto& [occ, amp] : state.terms()) {
    if (occ.total() != 1) throw Error(ErrorKind::Encoding, "quadbit decode needs exactly one photon");
    const ModeId m = occ.photons().front();
    bool found = false;
    for (std::size_t k = 0; k < 4; ++k) {
      if (lv[k] == m) {
        v(static_cast<Eigen::Index>(k)) += amp;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::Encoding, "photon outside the quadbit modes");
  }
  if (state.empty()) throw Error(ErrorKind::Encoding, "quadbit decode of an empty state");
  return v;
}

Eigen::Matrix4cd quadbit_fourier() {
  const Amplitude i(0.0, 1.0);
  Eigen::Matrix4cd m;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) m(j, k) = 0.5 * std::pow(i, (j * k) % 4);
  return m;
}

FockState photon_product(const std::vector<PhotonAmplitudes>& photons, RegistryPtr registry) {
  FockState s = FockState::vacuum(registry);
  for (const auto& p : photons) {
    std::vector<std::pair<Amplitude, FockState>> parts;
    for (const auto& [mode, c] : p.components) parts.emplace_back(c, fock::create(s, mode));
    s = fock::superpose(parts);
  }
  return s;
}

FockState photon_superposition(const std::vector<std::pair<Amplitude, std::vector<PhotonAmplitudes>>>& terms,
                               RegistryPtr registry) {
  std::vector<std::pair<Amplitude, FockState>> parts;
  for (const auto& [w, photons] : terms) parts.emplace_back(w, photon_product(photons, registry));
  return fock::superpose(parts);
}

PhotonAmplitudes quadbit_photon(const QuadbitCodec& codec, const Eigen::Vector4cd& logical) {
  PhotonAmplitudes p;
  const auto lv = codec.levels();
  for (std::size_t k = 0; k < 4; ++k) {
    const Amplitude c = logical(static_cast<Eigen::Index>(k));
    if (std::abs(c) > 0.0) p.components.emplace_back(lv[k], c);
  }
  return p;
}

PhotonAmplitudes quadbit_level(const QuadbitCodec& codec, int level) {
  return {{{codec.levels()[static_cast<std::size_t>(level)], Amplitude(1.0)}}};
}

PhotonAmplitudes quadbit_plus(const QuadbitCodec& codec, int level) {
  return quadbit_photon(codec, quadbit_fourier().col(level));
}

namespace {

PhotonAmplitudes single(ModeId m) { return {{{m, Amplitude(1.0)}}}; }

FockState two_term(int a, int b, fock::Pol pa1, fock::Pol pb1, fock::Pol pa2, fock::Pol pb2, double sign,
                   RegistryPtr registry) {
  const double r = 1.0 / std::sqrt(2.0);
  return photon_superposition({{Amplitude(r), {single({a, pa1}), single({b, pb1})}},
                               {Amplitude(sign * r), {single({a, pa2}), single({b, pb2})}}},
                              std::move(registry));
}

}  // namespace

FockState bell_phi_plus(int a, int b, RegistryPtr registry) {
  using fock::Pol;
  return two_term(a, b, Pol::H, Pol::H, Pol::V, Pol::V, 1.0, std::move(registry));
}

FockState bell_psi_plus(int a, int b, RegistryPtr registry) {
  using fock::Pol;
  return two_term(a, b, Pol::H, Pol::V, Pol::V, Pol::H, 1.0, std::move(registry));
}

FockState bell_phi_minus(int a, int b, RegistryPtr registry) {
  using fock::Pol;
  return two_term(a, b, Pol::H, Pol::H, Pol::V, Pol::V, -1.0, std::move(registry));
}

FockState ghz(const std::vector<int>& modes, RegistryPtr registry) {
  std::vector<PhotonAmplitudes> hs;
  std::vector<PhotonAmplitudes> vs;
  for (int m : modes) {
    hs.push_back(single(fock::H(m)));
    vs.push_back(single(fock::V(m)));
  }
  const double r = 1.0 / std::sqrt(2.0);
  return photon_superposition({{Amplitude(r), hs}, {Amplitude(r), vs}}, std::move(registry));
}

FockState hes(int a1, int a2, int b1, int b2, RegistryPtr registry) {
  const QuadbitCodec a{a1, a2};
  const QuadbitCodec b{b1, b2};
  std::vector<std::pair<Amplitude, std::vector<PhotonAmplitudes>>> terms;
  for (int i = 0; i < 4; ++i) terms.push_back({Amplitude(0.5), {quadbit_level(a, i), quadbit_level(b, i)}});
  return photon_superposition(terms, std::move(registry));
}

FockState qdc2(const QuadbitCodec& a, const QuadbitCodec& b, RegistryPtr registry) {
  std::vector<std::pair<Amplitude, std::vector<PhotonAmplitudes>>> terms;
  for (int i = 0; i < 4; ++i) terms.push_back({Amplitude(0.5), {quadbit_level(a, i), quadbit_plus(b, i)}});
  return photon_superposition(terms, std::move(registry));
}

FockState qdc3(const QuadbitCodec& a, const QuadbitCodec& b, const QuadbitCodec& c, RegistryPtr registry) {
  std::vector<std::pair<Amplitude, std::vector<PhotonAmplitudes>>> terms;
  for (int i = 0; i < 4; ++i)
    terms.push_back({Amplitude(0.5), {quadbit_plus(a, i), quadbit_level(b, i), quadbit_plus(c, i)}});
  return photon_superposition(terms, std::move(registry));
}

FockState qdc3_redundant(const QuadbitCodec& a, const QuadbitCodec& b1, const QuadbitCodec& b2,
                         const QuadbitCodec& c, RegistryPtr registry) {
  std::vector<std::pair<Amplitude, std::vector<PhotonAmplitudes>>> terms;
  for (int i = 0; i < 4; ++i)
    terms.push_back({Amplitude(0.5),
                     {quadbit_plus(a, i), quadbit_level(b1, i), quadbit_level(b2, i), quadbit_plus(c, i)}});
  return photon_superposition(terms, std::move(registry));
}

FockState qdc3_prime(const QuadbitCodec& a, const QuadbitCodec& b, const QuadbitCodec& c, RegistryPtr registry) {
  std::vector<std::pair<Amplitude, std::vector<PhotonAmplitudes>>> terms;
  for (int i = 0; i < 4; ++i) {
    const double sign = (i % 2 == 0) ? 0.5 : -0.5;
    terms.push_back({Amplitude(sign), {quadbit_level(a, i), quadbit_level(b, i), quadbit_level(c, i)}});
  }
  return photon_superposition(terms, std::move(registry));
}

FockState qdc4_star(const QuadbitCodec& a, const QuadbitCodec& b, const QuadbitCodec& c, const QuadbitCodec& d,
                    RegistryPtr registry) {
  std::vector<std::pair<Amplitude, std::vector<PhotonAmplitudes>>> terms;
  for (int i = 0; i < 4; ++i)
    terms.push_back(
        {Amplitude(0.5), {quadbit_plus(a, i), quadbit_level(b, i), quadbit_plus(c, i), quadbit_plus(d, i)}});
  return photon_superposition(terms, std::move(registry));
}

FockState qdc4_prime(const QuadbitCodec& a, const QuadbitCodec& b, const QuadbitCodec& c, const QuadbitCodec& d,
                     RegistryPtr registry) {
  std::vector<std::pair<Amplitude, std::vector<PhotonAmplitudes>>> terms;
  for (int i = 0; i < 4; ++i)
    terms.push_back(
        {Amplitude(0.5), {quadbit_level(a, i), quadbit_level(b, i), quadbit_level(c, i), quadbit_level(d, i)}});
  return photon_superposition(terms, std::move(registry));
}

}  // namespace quadsim::circuits
