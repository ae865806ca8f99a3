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

#include <algorithm>
#include <cmath>

#include "kernel_detail.hpp"

namespace paoa::kernels::omp {

namespace {

// Fixed block count so reductions do not depend on the thread count.
constexpr std::int64_t kReductionBlocks = 256;

template <class Term>
double blocked_sum(std::int64_t size, Term term) {
  const std::int64_t blocks = std::min<std::int64_t>(kReductionBlocks, size);
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::int64_t begin = size * b / blocks;
    const std::int64_t end = size * (b + 1) / blocks;
    double s = 0.0;
    for (std::int64_t i = begin; i < end; ++i) s += term(i);
    partial[b] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace

std::vector<std::int32_t> cut_table(const Graph& g) {
  const auto upper = upper_adjacency(g);
  const auto dim = static_cast<std::int64_t>(std::uint64_t{1} << g.num_vertices());
  std::vector<std::int32_t> cuts(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t z = 0; z < dim; ++z) cuts[z] = detail::cut_of(upper, z);
  return cuts;
}

void apply_phase(std::span<Amplitude> amps, std::span<const std::int32_t> cuts, double gamma) {
  const auto table = detail::phase_table(detail::max_value(cuts), gamma);
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t z = 0; z < size; ++z) amps[z] *= table[cuts[z]];
}

void apply_mixer(std::span<Amplitude> amps, int n, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
  for (int k = 0; k < n; ++k) {
    const std::uint64_t stride = std::uint64_t{1} << k;
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < half; ++t) {
      const std::uint64_t i0 = detail::pair_low(t, k);
      detail::mix_pair(amps[i0], amps[i0 | stride], c, s);
    }
  }
}

double norm_squared(std::span<const Amplitude> amps) {
  return blocked_sum(static_cast<std::int64_t>(amps.size()),
                     [&](std::int64_t i) { return std::norm(amps[i]); });
}

double expectation(std::span<const Amplitude> amps, std::span<const std::int32_t> cuts) {
  return blocked_sum(static_cast<std::int64_t>(amps.size()),
                     [&](std::int64_t i) { return std::norm(amps[i]) * cuts[i]; });
}

std::vector<double> cumulative_probabilities(std::span<const Amplitude> amps) {
  const auto size = static_cast<std::int64_t>(amps.size());
  std::vector<double> cdf(size);
#pragma omp parallel for schedule(static)
  for (std::int64_t z = 0; z < size; ++z) cdf[z] = std::norm(amps[z]);
  // Sequential prefix keeps the rounding identical to the serial kernel.
  double acc = 0.0;
  for (auto& p : cdf) {
    acc += p;
    p = acc;
  }
  return cdf;
}

ScanResult brute_force_scan(const Graph& g) {
  const int n = g.num_vertices();
  const auto upper = upper_adjacency(g);
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << (n - 1));
  ScanResult r;
  r.histogram.assign(g.num_edges() + 1, 0);
  r.best = -1;
  std::uint64_t best_key = 0;

#pragma omp parallel
  {
    std::vector<std::uint64_t> hist(g.num_edges() + 1, 0);
    int best = -1;
    std::uint64_t witness = 0;
    std::uint64_t key_of_best = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t t = 0; t < count; ++t) {
      const std::uint64_t z = static_cast<std::uint64_t>(t) << 1;
      const int cut = detail::cut_of(upper, z);
      ++hist[cut];
      if (cut > best) {
        best = cut;
        witness = z;
        key_of_best = detail::lex_key(z, n);
      } else if (cut == best) {
        const std::uint64_t key = detail::lex_key(z, n);
        if (key < key_of_best) {
          witness = z;
          key_of_best = key;
        }
      }
    }
#pragma omp critical(paoa_brute_force_merge)
    {
      for (std::size_t c = 0; c < hist.size(); ++c) r.histogram[c] += hist[c];
      if (best > r.best || (best == r.best && key_of_best < best_key)) {
        r.best = best;
        r.witness = witness;
        best_key = key_of_best;
      }
    }
  }
  return r;
}

void sample_shots(const PaoaCircuit& circuit, std::uint64_t base_seed, std::span<int> cuts,
                  BestSeen* best) {
  const auto shots = static_cast<std::int64_t>(cuts.size());
  const int n = circuit.graph().num_vertices();
#pragma omp parallel
  {
    BitString bits(n);
    BestSeen local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < shots; ++i) {
      Rng rng(derive_seed(base_seed, static_cast<std::uint64_t>(i)));
      circuit.sample(rng, bits);
      cuts[i] = cut_value(circuit.graph(), bits);
      if (best) local.offer(cuts[i], bits);
    }
    if (best) {
#pragma omp critical(paoa_best_seen_merge)
      best->merge(local);
    }
  }
}

}  // namespace paoa::kernels::omp
