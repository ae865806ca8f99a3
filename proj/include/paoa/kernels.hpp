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

#pragma once

// Data-parallel inner loops. `omp` is what the library calls; `serial` is the
// plain reference kept for tests and benchmarks. The two agree bit for bit
// except for summation order in norm_squared() and expectation().

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "paoa/pcircuit.hpp"
#include "paoa/sample_stats.hpp"

namespace paoa::kernels {

using Amplitude = std::complex<double>;

// For each vertex v, bitmask of neighbors u > v. Requires n <= 64.
std::vector<std::uint64_t> upper_adjacency(const Graph& g);

struct ScanResult {
  int best = 0;
  std::uint64_t witness = 0;             // basis index with z_0 == 0
  std::vector<std::uint64_t> histogram;  // over the 2^(n-1) scanned strings
};

namespace serial {

// Cut value of every basis index 0 .. 2^n - 1.
std::vector<std::int32_t> cut_table(const Graph& g);
// amp_z *= exp(i * gamma * cut(z)).
void apply_phase(std::span<Amplitude> amps, std::span<const std::int32_t> cuts, double gamma);
// exp(-i beta X) on every qubit.
void apply_mixer(std::span<Amplitude> amps, int n, double beta);
double norm_squared(std::span<const Amplitude> amps);
double expectation(std::span<const Amplitude> amps, std::span<const std::int32_t> cuts);
// Running sum of |amp|^2.
std::vector<double> cumulative_probabilities(std::span<const Amplitude> amps);
// Scans the strings with z_0 == 0; complements cover the other half.
ScanResult brute_force_scan(const Graph& g);
// cuts.size() shots; shot i draws from Rng(derive_seed(base_seed, i)).
void sample_shots(const PaoaCircuit& circuit, std::uint64_t base_seed, std::span<int> cuts,
                  BestSeen* best);

}  // namespace serial

namespace omp {

// Cut value of every basis index 0 .. 2^n - 1.
std::vector<std::int32_t> cut_table(const Graph& g);
// amp_z *= exp(i * gamma * cut(z)).
void apply_phase(std::span<Amplitude> amps, std::span<const std::int32_t> cuts, double gamma);
// exp(-i beta X) on every qubit.
void apply_mixer(std::span<Amplitude> amps, int n, double beta);
double norm_squared(std::span<const Amplitude> amps);
double expectation(std::span<const Amplitude> amps, std::span<const std::int32_t> cuts);
// Running sum of |amp|^2.
std::vector<double> cumulative_probabilities(std::span<const Amplitude> amps);
// Scans the strings with z_0 == 0; complements cover the other half.
ScanResult brute_force_scan(const Graph& g);
// cuts.size() shots; shot i draws from Rng(derive_seed(base_seed, i)).
void sample_shots(const PaoaCircuit& circuit, std::uint64_t base_seed, std::span<int> cuts,
                  BestSeen* best);

}  // namespace omp

}  // namespace paoa::kernels
