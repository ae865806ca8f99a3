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

#include "paoa/pcircuit.hpp"

#include <cmath>
#include <string>

#include "paoa/errors.hpp"
#include "paoa/kernels.hpp"

namespace paoa {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(std::string(what) + " = " + std::to_string(p) + " is outside [0, 1]");
  }
}

// Rows for outputs 00 and 11 stay zero; row 01 carries `to01`, row 10 its
// complement.
StochasticGate4 anti_aligned_gate(const std::array<double, 4>& to01) {
  StochasticGate4 g;
  for (int j = 0; j < 4; ++j) {
    check_probability(to01[j], "gate parameter");
    g.p[k01][j] = to01[j];
    g.p[k10][j] = 1.0 - to01[j];
  }
  return g;
}

}  // namespace

StochasticGate4 StochasticGate4::identity() {
  StochasticGate4 g;
  for (int i = 0; i < 4; ++i) g.p[i][i] = 1.0;
  return g;
}

bool StochasticGate4::is_column_stochastic(double tol) const {
  for (int j = 0; j < 4; ++j) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      if (p[i][j] < 0.0 || p[i][j] > 1.0) return false;
      sum += p[i][j];
    }
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

StochasticGate4 full_gate(double p1, double p2, double p3, double p4) {
  return anti_aligned_gate({p1, p2, p3, p4});
}

StochasticGate4 reduced_gate(double p) { return anti_aligned_gate({p, p, p, p}); }

StochasticGate4 min_gate(double p, double q) {
  check_probability(p, "p");
  check_probability(q, "q");
  return anti_aligned_gate({p, q, 1.0 - q, 1.0 - p});
}

StochasticGate4 compose(const StochasticGate4& g1, const StochasticGate4& g2) {
  auto same_column = [&](int a, int b) {
    for (int i = 0; i < 4; ++i)
      if (g1.p[i][a] != g1.p[i][b]) return false;
    return true;
  };
  StochasticGate4 out;
  for (int j = 0; j < 4; ++j) {
    // A convex combination of identical columns is that column; copying it
    // keeps products such as reduced(p') * reduced(p) exact.
    int first = -1;
    bool uniform = true;
    for (int m = 0; m < 4; ++m) {
      if (g2.p[m][j] == 0.0) continue;
      if (first < 0) first = m;
      else uniform = uniform && same_column(first, m);
    }
    for (int i = 0; i < 4; ++i) {
      if (first >= 0 && uniform) {
        out.p[i][j] = g1.p[i][first];
        continue;
      }
      double s = 0.0;
      for (int m = 0; m < 4; ++m) s += g1.p[i][m] * g2.p[m][j];
      out.p[i][j] = s;
    }
  }
  return out;
}

Matrix2 bit_flip_channel(double q) {
  check_probability(q, "q");
  return {{{1.0 - q, q}, {q, 1.0 - q}}};
}

PbitDistribution::PbitDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() != 2 && probs_.size() != 4) {
    throw InvalidArgument("p-bit distribution must have 2 or 4 entries");
  }
  double sum = 0.0;
  for (double p : probs_) {
    check_probability(p, "probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw InvalidArgument("probabilities must sum to 1");
}

PbitDistribution PbitDistribution::pbit(double p) {
  check_probability(p, "p");
  return PbitDistribution({1.0 - p, p});
}

PbitDistribution PbitDistribution::apply(const Matrix2& m) const {
  if (probs_.size() != 2) throw InvalidArgument("2x2 channel needs a single p-bit");
  return PbitDistribution({m[0][0] * probs_[0] + m[0][1] * probs_[1],
                           m[1][0] * probs_[0] + m[1][1] * probs_[1]});
}

PbitDistribution PbitDistribution::apply(const StochasticGate4& g) const {
  if (probs_.size() != 4) throw InvalidArgument("two-bit gate needs a pair distribution");
  std::vector<double> out(4, 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += g.p[i][j] * probs_[j];
  return PbitDistribution(std::move(out));
}

int apply_gate(int pair_state, const StochasticGate4& gate, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  int last_possible = 0;
  for (int i = 0; i < 4; ++i) {
    const double p = gate.p[i][pair_state];
    if (p <= 0.0) continue;
    acc += p;
    last_possible = i;
    if (u < acc) return i;
  }
  // Only reachable when the column sums to slightly less than 1.
  return last_possible;
}

AnsatzParams::AnsatzParams(Ansatz kind, std::vector<double> values, int layers)
    : kind_(kind), values_(std::move(values)), layers_(layers) {
  for (double v : values_) check_probability(v, "ansatz parameter");
}

AnsatzParams AnsatzParams::full(std::vector<double> values) {
  if (values.size() % 4 != 0) throw InvalidArgument("Full PAOA needs 4 parameters per edge");
  return AnsatzParams(Ansatz::Full, std::move(values), 1);
}

AnsatzParams AnsatzParams::reduced(std::vector<double> values) {
  return AnsatzParams(Ansatz::Reduced, std::move(values), 1);
}

AnsatzParams AnsatzParams::min(std::vector<double> values) {
  if (values.empty() || values.size() % 2 != 0) {
    throw InvalidArgument("Min PAOA needs a (p, q) pair per layer");
  }
  const int layers = static_cast<int>(values.size() / 2);
  return AnsatzParams(Ansatz::Min, std::move(values), layers);
}

AnsatzParams AnsatzParams::of(Ansatz kind, std::vector<double> values) {
  switch (kind) {
    case Ansatz::Full:
      return full(std::move(values));
    case Ansatz::Reduced:
      return reduced(std::move(values));
    case Ansatz::Min:
      return min(std::move(values));
  }
  throw InvalidArgument("unknown ansatz");
}

std::size_t AnsatzParams::dimension(Ansatz kind, const Graph& g, int layers) {
  switch (kind) {
    case Ansatz::Full:
      return 4 * g.num_edges();
    case Ansatz::Reduced:
      return g.num_edges();
    case Ansatz::Min:
      return 2 * static_cast<std::size_t>(layers);
  }
  return 0;
}

void AnsatzParams::check_dimensions(const Graph& g) const {
  const std::size_t want = dimension(kind_, g, layers_);
  if (values_.size() != want) {
    throw InvalidArgument("ansatz has " + std::to_string(values_.size()) +
                          " parameters, graph needs " + std::to_string(want));
  }
}

PaoaCircuit::PaoaCircuit(const Graph& g, const AnsatzParams& params)
    : graph_(&g), layers_(params.layers()), shared_per_layer_(params.kind() == Ansatz::Min) {
  params.check_dimensions(g);
  const auto v = params.values();
  switch (params.kind()) {
    case Ansatz::Full:
      for (std::size_t e = 0; e < g.num_edges(); ++e)
        gates_.push_back(full_gate(v[4 * e], v[4 * e + 1], v[4 * e + 2], v[4 * e + 3]));
      break;
    case Ansatz::Reduced:
      for (double p : v) gates_.push_back(reduced_gate(p));
      break;
    case Ansatz::Min:
      for (int layer = 0; layer < layers_; ++layer)
        gates_.push_back(min_gate(v[2 * layer], v[2 * layer + 1]));
      break;
  }
}

const StochasticGate4& PaoaCircuit::gate(int layer, std::size_t edge) const {
  return shared_per_layer_ ? gates_[layer] : gates_[edge];
}

void PaoaCircuit::sample(Rng& rng, std::span<std::uint8_t> bits) const {
  for (auto& b : bits) b = rng.bit() ? 1 : 0;
  const auto edges = graph_->edges();
  for (int layer = 0; layer < layers_; ++layer) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const int k = edges[e].k;
      const int l = edges[e].l;
      const int out = apply_gate(2 * bits[k] + bits[l], gate(layer, e), rng);
      bits[k] = static_cast<std::uint8_t>(out >> 1);
      bits[l] = static_cast<std::uint8_t>(out & 1);
    }
  }
}

BitString PaoaCircuit::sample(Rng& rng) const {
  BitString bits(graph_->num_vertices());
  sample(rng, bits);
  return bits;
}

BitString sample_circuit(const Graph& g, const AnsatzParams& params, Rng& rng) {
  return PaoaCircuit(g, params).sample(rng);
}

SampleStats estimate(const Graph& g, const AnsatzParams& params, std::size_t shots, Rng& rng,
                     BestSeen* best) {
  if (shots < 1) throw InvalidArgument("estimate needs at least one shot");
  const PaoaCircuit circuit(g, params);
  std::vector<int> cuts(shots);
  kernels::omp::sample_shots(circuit, rng(), cuts, best);
  return summarize(cuts);
}

}  // namespace paoa
