// Copyright 2026 The PAOA Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "paoa/graph.hpp"
#include "paoa/kernels.hpp"
#include "paoa/pcircuit.hpp"

namespace {

using paoa::kernels::Amplitude;
namespace serial = paoa::kernels::serial;
namespace omp = paoa::kernels::omp;

std::vector<Amplitude> plus_state(int n) {
  const std::size_t dim = std::size_t{1} << n;
  return std::vector<Amplitude>(dim, Amplitude(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

paoa::Graph regular(int n) { return paoa::generate(paoa::RandomRegular{n, 3}, 1); }

template <auto Mixer>
void BM_Mixer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amps = plus_state(n);
  for (auto _ : state) {
    Mixer(amps, n, 0.37);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Phase, auto Table>
void BM_Phase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cuts = Table(regular(n));
  auto amps = plus_state(n);
  for (auto _ : state) {
    Phase(amps, cuts, 0.91);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Expectation>
void BM_Expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cuts = serial::cut_table(regular(n));
  const auto amps = plus_state(n);
  for (auto _ : state) benchmark::DoNotOptimize(Expectation(amps, cuts));
}

template <auto Scan>
void BM_BruteForce(benchmark::State& state) {
  const paoa::Graph g = regular(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Scan(g).best);
}

template <auto Sample>
void BM_SampleShots(benchmark::State& state) {
  const paoa::Graph g = paoa::generate(paoa::Ring{static_cast<int>(state.range(0))}, 0);
  const paoa::PaoaCircuit circuit(
      g, paoa::AnsatzParams::reduced(std::vector<double>(g.num_edges(), 0.8)));
  std::vector<int> cuts(1000);
  for (auto _ : state) {
    paoa::BestSeen best;
    Sample(circuit, 5, cuts, &best);
    benchmark::DoNotOptimize(cuts.data());
  }
}

}  // namespace

BENCHMARK(BM_Mixer<serial::apply_mixer>)->Name("mixer/serial")->Arg(16)->Arg(20);
BENCHMARK(BM_Mixer<omp::apply_mixer>)->Name("mixer/omp")->Arg(16)->Arg(20);
BENCHMARK(BM_Phase<serial::apply_phase, serial::cut_table>)->Name("phase/serial")->Arg(16)->Arg(20);
BENCHMARK(BM_Phase<omp::apply_phase, omp::cut_table>)->Name("phase/omp")->Arg(16)->Arg(20);
BENCHMARK(BM_Expectation<serial::expectation>)->Name("expectation/serial")->Arg(20);
BENCHMARK(BM_Expectation<omp::expectation>)->Name("expectation/omp")->Arg(20);
BENCHMARK(BM_BruteForce<serial::brute_force_scan>)->Name("brute_force/serial")->Arg(20);
BENCHMARK(BM_BruteForce<omp::brute_force_scan>)->Name("brute_force/omp")->Arg(20);
BENCHMARK(BM_SampleShots<serial::sample_shots>)->Name("sample_shots/serial")->Arg(100);
BENCHMARK(BM_SampleShots<omp::sample_shots>)->Name("sample_shots/omp")->Arg(100);

BENCHMARK_MAIN();
