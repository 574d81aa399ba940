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

#include <benchmark/benchmark.h>

#include <numbers>

#include "quadsim/analysis/protocol.hpp"
#include "quadsim/circuits/catalogue.hpp"
#include "quadsim/circuits/correction.hpp"
#include "quadsim/circuits/states.hpp"
#include "quadsim/optics/elements.hpp"

namespace {

using namespace quadsim;

// Two HESs pushed through the linear part of a quadbit fusion network.
void BM_ApplyNetwork(benchmark::State& state) {
  auto reg = fock::make_registry(8);
  const auto left = circuits::hes(1, 2, 3, 4, fock::share(fock::Registry::from_spatial({1, 2, 3, 4})));
  const auto right = circuits::hes(5, 6, 7, 8, fock::share(fock::Registry::from_spatial({5, 6, 7, 8})));
  const auto input = fock::rehome(fock::tensor(left, right), reg);
  const std::vector<optics::Element> network = {
      optics::rotator(std::numbers::pi / 2, 5), optics::four_port(3, 5, 4, 6), optics::pbs(3, 4),
      optics::rotator(std::numbers::pi / 4, 3), optics::beam_splitter(0.5, 5, 6), optics::quadbit_fourier(3, 4)};
  for (auto _ : state) benchmark::DoNotOptimize(optics::apply(input, network));
}
BENCHMARK(BM_ApplyNetwork);

void BM_RunProtocol(benchmark::State& state, const char* name) {
  const auto circuit = circuits::builtin_circuit(name);
  for (auto _ : state) benchmark::DoNotOptimize(analysis::run_protocol(circuit));
}
BENCHMARK_CAPTURE(BM_RunProtocol, T3, "T3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunProtocol, J2_bell2, "J2:bell2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunProtocol, K1, "K1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunProtocol, B, "B")->Unit(benchmark::kMillisecond);

void BM_FindCorrection(benchmark::State& state) {
  auto reg = fock::make_registry(6);
  const auto prime = circuits::qdc3_prime({1, 2}, {3, 4}, {5, 6}, reg);
  const circuits::TargetSpec target{circuits::TargetFamily::Qdc3, {1, 2, 3, 4, 5, 6}};
  for (auto _ : state) benchmark::DoNotOptimize(circuits::find_correction(prime, target));
}
BENCHMARK(BM_FindCorrection)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
