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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "paoa/graph.hpp"
#include "paoa/rng.hpp"

namespace paoa {

// 2^24 complex doubles = 256 MiB.
inline constexpr int kDefaultMaxQubits = 24;

// Dense state over n qubits; bit i of a basis index is z_i.
class Statevector {
 public:
  using Amplitude = std::complex<double>;

  Statevector(int n, std::vector<Amplitude> amplitudes);

  static Statevector basis(int n, std::uint64_t index);

  int num_qubits() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;  // sqrt(sum |amp|^2)

 private:
  int n_;
  std::vector<Amplitude> amps_;
};

// Uniform superposition. Throws ResourceLimit outside 1 <= n <= max_qubits.
Statevector init_plus(int n, int max_qubits = kDefaultMaxQubits);

// Angles per layer; gammas wrapped into [0, 2pi), betas into [0, pi).
class QaoaParams {
 public:
  QaoaParams(std::vector<double> gammas, std::vector<double> betas);

  // Layout (gamma_1..gamma_p, beta_1..beta_p).
  static QaoaParams from_vector(std::span<const double> x);

  int depth() const { return static_cast<int>(gammas_.size()); }
  std::span<const double> gammas() const { return gammas_; }
  std::span<const double> betas() const { return betas_; }

 private:
  std::vector<double> gammas_;
  std::vector<double> betas_;
};

// Multiplies amplitude z by exp(-i gamma c(z)) with c(z) = -cut(z).
void apply_cost_phase(Statevector& sv, const Graph& g, double gamma);

// exp(-i beta X) on every qubit.
void apply_mixer(Statevector& sv, double beta);

// prod_k U(B, beta_k) U(C, gamma_k) |+_n>, gamma_1 applied first.
Statevector run_qaoa(const Graph& g, const QaoaParams& params, int max_qubits = kDefaultMaxQubits);

// Exact sum_z |amp_z|^2 cut(z).
double expectation_cut(const Statevector& sv, const Graph& g);

std::vector<BitString> sample_measurements(const Statevector& sv, std::size_t shots, Rng& rng);

// Caches the cut table of one graph so repeated parameter evaluations pay
// only for the layers.
class QaoaSimulator {
 public:
  explicit QaoaSimulator(const Graph& g, int max_qubits = kDefaultMaxQubits);

  Statevector run(const QaoaParams& params) const;
  double expectation(const Statevector& sv) const;

  // Measurement outcomes as basis indices plus their cut values.
  std::vector<std::uint64_t> sample(const Statevector& sv, std::size_t shots, Rng& rng) const;
  int cut_of(std::uint64_t index) const { return cuts_[index]; }

  int num_qubits() const { return n_; }

 private:
  int n_;
  std::vector<std::int32_t> cuts_;
};

}  // namespace paoa
