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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "paoa/graph.hpp"
#include "paoa/rng.hpp"
#include "paoa/sample_stats.hpp"

namespace paoa {

// Pair states over (z_k, z_l), k < l, in basis order 00, 01, 10, 11.
enum PairState : int { k00 = 0, k01 = 1, k10 = 2, k11 = 3 };

using Matrix2 = std::array<std::array<double, 2>, 2>;

// 4x4 column-stochastic transition matrix; at(i, j) = Pr(out i | in j).
struct StochasticGate4 {
  std::array<std::array<double, 4>, 4> p{};

  double at(int out, int in) const { return p[out][in]; }

  static StochasticGate4 identity();
  bool is_column_stochastic(double tol = 1e-12) const;

  friend bool operator==(const StochasticGate4&, const StochasticGate4&) = default;
};

// Gate constructors. Every parameter must lie in [0, 1].
StochasticGate4 full_gate(double p1, double p2, double p3, double p4);
StochasticGate4 reduced_gate(double p);
StochasticGate4 min_gate(double p, double q);

// g1 * g2: g2 acts first.
StochasticGate4 compose(const StochasticGate4& g1, const StochasticGate4& g2);

// [[1-q, q], [q, 1-q]].
Matrix2 bit_flip_channel(double q);

// Probability vector over one p-bit (length 2) or one bit pair (length 4).
class PbitDistribution {
 public:
  explicit PbitDistribution(std::vector<double> probs);

  // (1 - p, p).
  static PbitDistribution pbit(double p);

  PbitDistribution apply(const Matrix2& m) const;
  PbitDistribution apply(const StochasticGate4& g) const;

  std::span<const double> probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// Samples the gate's output for `pair_state` using exactly one uniform draw,
// walking rows in order 00, 01, 10, 11.
int apply_gate(int pair_state, const StochasticGate4& gate, Rng& rng);

enum class Ansatz { Full, Reduced, Min };

// Variational parameters of one PAOA circuit. Layout of values():
//   Full:    p1..p4 per edge, edge-major (4|E| entries)
//   Reduced: one p per edge (|E| entries)
//   Min:     (p, q) per layer (2L entries)
class AnsatzParams {
 public:
  static AnsatzParams full(std::vector<double> values);
  static AnsatzParams reduced(std::vector<double> values);
  static AnsatzParams min(std::vector<double> values);  // layers = size / 2
  static AnsatzParams of(Ansatz kind, std::vector<double> values);

  static std::size_t dimension(Ansatz kind, const Graph& g, int layers = 1);

  Ansatz kind() const { return kind_; }
  int layers() const { return layers_; }
  std::span<const double> values() const { return values_; }

  // Throws InvalidArgument when the parameter count does not fit `g`.
  void check_dimensions(const Graph& g) const;

 private:
  AnsatzParams(Ansatz kind, std::vector<double> values, int layers);

  Ansatz kind_;
  std::vector<double> values_;
  int layers_;
};

// A parameterized circuit bound to a graph with its gates prebuilt.
class PaoaCircuit {
 public:
  PaoaCircuit(const Graph& g, const AnsatzParams& params);

  // Uniform random start, then every layer applies one gate per edge in
  // canonical order, updating (z_k, z_l) in place.
  void sample(Rng& rng, std::span<std::uint8_t> bits) const;
  BitString sample(Rng& rng) const;

  const Graph& graph() const { return *graph_; }
  int layers() const { return layers_; }
  const StochasticGate4& gate(int layer, std::size_t edge) const;

 private:
  const Graph* graph_;
  int layers_;
  bool shared_per_layer_;
  std::vector<StochasticGate4> gates_;
};

BitString sample_circuit(const Graph& g, const AnsatzParams& params, Rng& rng);

// Draws `shots` strings (one RNG stream per shot, derived from a single draw
// of `rng`) and summarizes their cut values. Optionally records the best
// string seen.
SampleStats estimate(const Graph& g, const AnsatzParams& params, std::size_t shots, Rng& rng,
                     BestSeen* best = nullptr);

}  // namespace paoa
