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

#include <cmath>

#include "kernel_detail.hpp"
#include "paoa/errors.hpp"

namespace paoa::kernels {

std::vector<std::uint64_t> upper_adjacency(const Graph& g) {
  if (g.num_vertices() > 64) throw ResourceLimit("bitmask kernels support n <= 64");
  std::vector<std::uint64_t> upper(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) upper[e.k] |= std::uint64_t{1} << e.l;
  return upper;
}

namespace serial {

std::vector<std::int32_t> cut_table(const Graph& g) {
  const auto upper = upper_adjacency(g);
  const std::uint64_t dim = std::uint64_t{1} << g.num_vertices();
  std::vector<std::int32_t> cuts(dim);
  for (std::uint64_t z = 0; z < dim; ++z) cuts[z] = detail::cut_of(upper, z);
  return cuts;
}

void apply_phase(std::span<Amplitude> amps, std::span<const std::int32_t> cuts, double gamma) {
  const auto table = detail::phase_table(detail::max_value(cuts), gamma);
  for (std::size_t z = 0; z < amps.size(); ++z) amps[z] *= table[cuts[z]];
}

void apply_mixer(std::span<Amplitude> amps, int n, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::uint64_t half = amps.size() / 2;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t stride = std::uint64_t{1} << k;
    for (std::uint64_t t = 0; t < half; ++t) {
      const std::uint64_t i0 = detail::pair_low(t, k);
      detail::mix_pair(amps[i0], amps[i0 | stride], c, s);
    }
  }
}

double norm_squared(std::span<const Amplitude> amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

double expectation(std::span<const Amplitude> amps, std::span<const std::int32_t> cuts) {
  double s = 0.0;
  for (std::size_t z = 0; z < amps.size(); ++z) s += std::norm(amps[z]) * cuts[z];
  return s;
}

std::vector<double> cumulative_probabilities(std::span<const Amplitude> amps) {
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t z = 0; z < amps.size(); ++z) {
    acc += std::norm(amps[z]);
    cdf[z] = acc;
  }
  return cdf;
}

ScanResult brute_force_scan(const Graph& g) {
  const int n = g.num_vertices();
  const auto upper = upper_adjacency(g);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  ScanResult r;
  r.histogram.assign(g.num_edges() + 1, 0);
  r.best = -1;
  std::uint64_t best_key = 0;
  for (std::uint64_t t = 0; t < count; ++t) {
    const std::uint64_t z = t << 1;
    const int cut = detail::cut_of(upper, z);
    ++r.histogram[cut];
    if (cut > r.best) {
      r.best = cut;
      r.witness = z;
      best_key = detail::lex_key(z, n);
    } else if (cut == r.best) {
      const std::uint64_t key = detail::lex_key(z, n);
      if (key < best_key) {
        r.witness = z;
        best_key = key;
      }
    }
  }
  return r;
}

void sample_shots(const PaoaCircuit& circuit, std::uint64_t base_seed, std::span<int> cuts,
                  BestSeen* best) {
  BitString bits(circuit.graph().num_vertices());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    Rng rng(derive_seed(base_seed, i));
    circuit.sample(rng, bits);
    cuts[i] = cut_value(circuit.graph(), bits);
    if (best) best->offer(cuts[i], bits);
  }
}

}  // namespace serial
}  // namespace paoa::kernels
