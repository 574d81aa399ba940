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

#include "quadsim/optics/elements.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "quadsim/error.hpp"

namespace quadsim::optics {

using fock::Amplitude;
using fock::FockState;
using fock::OccupationVector;

namespace {

constexpr Amplitude kI{0.0, 1.0};

std::vector<ModeId> both_pols(const std::vector<int>& spatial) {
  std::vector<ModeId> modes;
  for (int s : spatial) {
    modes.push_back(fock::H(s));
    modes.push_back(fock::V(s));
  }
  return modes;
}

void require_distinct(const std::vector<int>& spatial) {
  std::vector<int> s = spatial;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(ErrorKind::Parameter, "element acts on a repeated spatial mode");
}

}  // namespace

double ModeUnitary::unitarity_defect() const {
  const auto n = matrix.cols();
  return (matrix.adjoint() * matrix - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

Eigen::Matrix4cd bs_matrix(double r_sq) {
  if (!(r_sq >= 0.0 && r_sq <= 1.0)) throw Error(ErrorKind::Parameter, "beam splitter r^2 outside [0, 1]");
  const double t = std::sqrt(1.0 - r_sq);
  const double r = std::sqrt(r_sq);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int p = 0; p < 2; ++p) {
    m(p, p) = t;
    m(2 + p, p) = r;
    m(p, 2 + p) = -r;
    m(2 + p, 2 + p) = t;
  }
  return m;
}

Eigen::Matrix2cd rotator_matrix(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

Eigen::Matrix4cd pbs_matrix() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;
  m(2, 2) = 1.0;
  m(3, 1) = 1.0;
  m(1, 3) = 1.0;
  return m;
}

Eigen::Matrix2cd phase_matrix(double phi) {
  const Amplitude e = std::exp(kI * phi);
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = e;
  m(1, 1) = e;
  return m;
}

Eigen::Matrix<std::complex<double>, 8, 8> four_port_matrix() {
  // Row i lists the image of input port i over the output ports.
  static constexpr int kRows[4][4] = {{1, 1, 1, 1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {1, -1, -1, 1}};
  Eigen::Matrix<std::complex<double>, 8, 8> m = Eigen::Matrix<std::complex<double>, 8, 8>::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int p = 0; p < 2; ++p) m(2 * j + p, 2 * i + p) = 0.5 * kRows[i][j];
  return m;
}

Eigen::Matrix4cd quadbit_fourier_matrix() {
  Eigen::Matrix4cd m;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) m(j, k) = 0.5 * std::pow(kI, (j * k) % 4);
  return m;
}

std::vector<ModeId> Element::acted_modes() const {
  if (kind == ElementKind::Phase && pol) return {ModeId{spatial.at(0), *pol}};
  return both_pols(spatial);
}

ModeUnitary Element::unitary() const {
  ModeUnitary u;
  u.modes = acted_modes();
  switch (kind) {
    case ElementKind::BeamSplitter: u.matrix = bs_matrix(param); break;
    case ElementKind::Rotator: u.matrix = rotator_matrix(param); break;
    case ElementKind::PBS: u.matrix = pbs_matrix(); break;
    case ElementKind::Phase:
      if (pol) {
        u.matrix = Eigen::MatrixXcd::Constant(1, 1, std::exp(kI * param));
      } else {
        u.matrix = phase_matrix(param);
      }
      break;
    case ElementKind::FourPort: u.matrix = four_port_matrix(); break;
    case ElementKind::QuadbitFourier: u.matrix = quadbit_fourier_matrix(); break;
    case ElementKind::InverseQuadbitFourier: u.matrix = quadbit_fourier_matrix().adjoint(); break;
  }
  return u;
}

Element beam_splitter(double r_sq, int m1, int m2) {
  require_distinct({m1, m2});
  if (!(r_sq >= 0.0 && r_sq <= 1.0)) throw Error(ErrorKind::Parameter, "beam splitter r^2 outside [0, 1]");
  return {ElementKind::BeamSplitter, r_sq, {m1, m2}, std::nullopt};
}

Element rotator(double theta, int m) { return {ElementKind::Rotator, theta, {m}, std::nullopt}; }

Element pbs(int m1, int m2) {
  require_distinct({m1, m2});
  return {ElementKind::PBS, 0.0, {m1, m2}, std::nullopt};
}

Element phase(double phi, int m, std::optional<Pol> pol) { return {ElementKind::Phase, phi, {m}, pol}; }

Element four_port(int m1, int m2, int m3, int m4) {
  require_distinct({m1, m2, m3, m4});
  return {ElementKind::FourPort, 0.0, {m1, m2, m3, m4}, std::nullopt};
}

Element quadbit_fourier(int m1, int m2) {
  require_distinct({m1, m2});
  return {ElementKind::QuadbitFourier, 0.0, {m1, m2}, std::nullopt};
}

Element inverse_quadbit_fourier(int m1, int m2) {
  require_distinct({m1, m2});
  return {ElementKind::InverseQuadbitFourier, 0.0, {m1, m2}, std::nullopt};
}

ModeUnitary bs_unitary(double r_sq, int m1, int m2) { return beam_splitter(r_sq, m1, m2).unitary(); }
ModeUnitary rotator_unitary(double theta, int m) { return rotator(theta, m).unitary(); }
ModeUnitary pbs_unitary(int m1, int m2) { return pbs(m1, m2).unitary(); }
ModeUnitary phase_unitary(double phi, int m, std::optional<Pol> pol) { return phase(phi, m, pol).unitary(); }
ModeUnitary four_port_unitary(int m1, int m2, int m3, int m4) { return four_port(m1, m2, m3, m4).unitary(); }

std::string describe(const Element& e) {
  std::ostringstream os;
  switch (e.kind) {
    case ElementKind::BeamSplitter: os << "BS(r^2=" << e.param << ")"; break;
    case ElementKind::Rotator: os << "R(" << e.param << ")"; break;
    case ElementKind::PBS: os << "PBS"; break;
    case ElementKind::Phase: os << "P(" << e.param << ")"; break;
    case ElementKind::FourPort: os << "FourPort"; break;
    case ElementKind::QuadbitFourier: os << "QFT4"; break;
    case ElementKind::InverseQuadbitFourier: os << "QFT4^-1"; break;
  }
  os << " on";
  for (int s : e.spatial) os << ' ' << fock::spatial_label(s);
  if (e.pol) os << fock::to_char(*e.pol);
  return os.str();
}

namespace {

using LocalKey = std::vector<std::uint8_t>;
using Expansion = std::vector<std::pair<LocalKey, Amplitude>>;

double sqrt_factorials(const LocalKey& key) {
  double f = 1.0;
  int run = 0;
  for (std::size_t i = 0; i < key.size(); ++i) {
    run = (i > 0 && key[i] == key[i - 1]) ? run + 1 : 1;
    f *= run;
  }
  return std::sqrt(f);
}

Expansion expand(const LocalKey& input, const Eigen::MatrixXcd& u) {
  std::map<LocalKey, Amplitude> poly{{LocalKey{}, Amplitude(1.0)}};
  const auto n = static_cast<int>(u.rows());
  for (std::uint8_t i : input) {
    std::map<LocalKey, Amplitude> next;
    for (const auto& [key, c] : poly) {
      for (int j = 0; j < n; ++j) {
        const Amplitude uji = u(j, i);
        if (uji == Amplitude(0.0)) continue;
        LocalKey k2 = key;
        k2.insert(std::upper_bound(k2.begin(), k2.end(), static_cast<std::uint8_t>(j)),
                  static_cast<std::uint8_t>(j));
        next[std::move(k2)] += c * uji;
      }
    }
    poly = std::move(next);
  }
  const double in_norm = sqrt_factorials(input);
  Expansion out;
  out.reserve(poly.size());
  for (auto& [key, c] : poly) {
    if (std::abs(c) < 1e-15) continue;
    out.emplace_back(key, c * (sqrt_factorials(key) / in_norm));
  }
  return out;
}

}  // namespace

FockState apply(const FockState& state, const ModeUnitary& unitary) {
  const auto& modes = unitary.modes;
  if (static_cast<std::size_t>(unitary.matrix.rows()) != modes.size() ||
      static_cast<std::size_t>(unitary.matrix.cols()) != modes.size())
    throw Error(ErrorKind::Parameter, "unitary shape does not match its modes");
  for (const auto& m : modes)
    if (!state.registry().contains(m)) throw Error(ErrorKind::Mode, "element mode " + fock::to_string(m) + " not in registry");

  auto local_index = [&](ModeId m) -> int {
    for (std::size_t k = 0; k < modes.size(); ++k)
      if (modes[k] == m) return static_cast<int>(k);
    return -1;
  };

  std::map<LocalKey, Expansion> cache;
  fock::StateAccumulator acc(state.registry_ptr());
  acc.reserve(state.size() * 2);
  for (const auto& [occ, amp] : state.terms()) {
    LocalKey input;
    std::vector<ModeId> rest;
    for (const auto& m : occ.photons()) {
      const int k = local_index(m);
      if (k >= 0)
        input.push_back(static_cast<std::uint8_t>(k));
      else
        rest.push_back(m);
    }
    std::sort(input.begin(), input.end());
    auto it = cache.find(input);
    if (it == cache.end()) it = cache.emplace(input, expand(input, unitary.matrix)).first;
    for (const auto& [out_key, c] : it->second) {
      std::vector<ModeId> photons = rest;
      for (std::uint8_t k : out_key) photons.push_back(modes[k]);
      acc.add(OccupationVector(std::move(photons)), amp * c);
    }
  }
  return std::move(acc).finish(state.prune_eps());
}

FockState apply(const FockState& state, const Element& element) { return apply(state, element.unitary()); }

FockState apply(const FockState& state, const std::vector<Element>& elements) {
  FockState s = state;
  for (const auto& e : elements) s = apply(s, e);
  return s;
}

}  // namespace quadsim::optics
