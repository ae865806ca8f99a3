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

#include "paoa/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "paoa/errors.hpp"
#include "paoa/kernels.hpp"

namespace paoa {

namespace {

void check_qubits(int n, int max_qubits) {
  if (n < 1 || n > max_qubits) {
    throw ResourceLimit("statevector simulation supports 1 <= n <= " +
                        std::to_string(max_qubits) + ", got n=" + std::to_string(n));
  }
}

void check_dimension(const Statevector& sv, const Graph& g) {
  if (sv.num_qubits() != g.num_vertices()) {
    throw InvalidArgument("statevector has " + std::to_string(sv.num_qubits()) +
                          " qubits but graph has " + std::to_string(g.num_vertices()) +
                          " vertices");
  }
}

double wrap(double x, double period) {
  if (!std::isfinite(x)) throw InvalidArgument("QAOA angle must be finite");
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  return r >= period ? 0.0 : r;
}

std::vector<std::uint64_t> draw_indices(const std::vector<double>& cdf, std::size_t shots,
                                        Rng& rng) {
  const double total = cdf.back();
  // Last index with non-zero probability, for u * total rounding up to total.
  std::size_t last = cdf.size() - 1;
  while (last > 0 && cdf[last] == cdf[last - 1]) --last;

  std::vector<std::uint64_t> out(shots);
  for (auto& idx : out) {
    const double x = rng.uniform() * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), x);
    idx = it == cdf.end() ? last : static_cast<std::uint64_t>(it - cdf.begin());
  }
  return out;
}

}  // namespace

Statevector::Statevector(int n, std::vector<Amplitude> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  if (n < 1 || n > 62 || amps_.size() != (std::size_t{1} << n)) {
    throw InvalidArgument("statevector needs 2^n amplitudes");
  }
}

Statevector Statevector::basis(int n, std::uint64_t index) {
  check_qubits(n, kDefaultMaxQubits);
  std::vector<Amplitude> amps(std::size_t{1} << n);
  if (index >= amps.size()) throw InvalidArgument("basis index out of range");
  amps[index] = 1.0;
  return Statevector(n, std::move(amps));
}

double Statevector::norm() const { return std::sqrt(kernels::omp::norm_squared(amps_)); }

Statevector init_plus(int n, int max_qubits) {
  check_qubits(n, max_qubits);
  const double a = std::sqrt(std::ldexp(1.0, -n));
  return Statevector(n, std::vector<Statevector::Amplitude>(std::size_t{1} << n, a));
}

QaoaParams::QaoaParams(std::vector<double> gammas, std::vector<double> betas)
    : gammas_(std::move(gammas)), betas_(std::move(betas)) {
  if (gammas_.size() != betas_.size() || gammas_.empty()) {
    throw InvalidArgument("QAOA needs equal, non-zero numbers of gammas and betas");
  }
  for (double& g : gammas_) g = wrap(g, 2.0 * std::numbers::pi);
  for (double& b : betas_) b = wrap(b, std::numbers::pi);
}

QaoaParams QaoaParams::from_vector(std::span<const double> x) {
  if (x.size() % 2 != 0) throw InvalidArgument("QAOA parameter vector must have even length");
  const std::size_t p = x.size() / 2;
  return QaoaParams({x.begin(), x.begin() + p}, {x.begin() + p, x.end()});
}

void apply_cost_phase(Statevector& sv, const Graph& g, double gamma) {
  check_dimension(sv, g);
  const auto cuts = kernels::omp::cut_table(g);
  kernels::omp::apply_phase(sv.amplitudes(), cuts, gamma);
}

void apply_mixer(Statevector& sv, double beta) {
  kernels::omp::apply_mixer(sv.amplitudes(), sv.num_qubits(), beta);
}

Statevector run_qaoa(const Graph& g, const QaoaParams& params, int max_qubits) {
  return QaoaSimulator(g, max_qubits).run(params);
}

double expectation_cut(const Statevector& sv, const Graph& g) {
  check_dimension(sv, g);
  return kernels::omp::expectation(sv.amplitudes(), kernels::omp::cut_table(g));
}

std::vector<BitString> sample_measurements(const Statevector& sv, std::size_t shots, Rng& rng) {
  if (shots < 1) throw InvalidArgument("need at least one shot");
  const auto indices = draw_indices(kernels::omp::cumulative_probabilities(sv.amplitudes()),
                                    shots, rng);
  std::vector<BitString> out;
  out.reserve(shots);
  for (auto idx : indices) out.push_back(bits_from_index(idx, sv.num_qubits()));
  return out;
}

QaoaSimulator::QaoaSimulator(const Graph& g, int max_qubits) : n_(g.num_vertices()) {
  check_qubits(n_, max_qubits);
  cuts_ = kernels::omp::cut_table(g);
}

Statevector QaoaSimulator::run(const QaoaParams& params) const {
  Statevector sv = init_plus(n_, n_);
  for (int layer = 0; layer < params.depth(); ++layer) {
    kernels::omp::apply_phase(sv.amplitudes(), cuts_, params.gammas()[layer]);
    kernels::omp::apply_mixer(sv.amplitudes(), n_, params.betas()[layer]);
  }
  return sv;
}

double QaoaSimulator::expectation(const Statevector& sv) const {
  if (sv.num_qubits() != n_) throw InvalidArgument("statevector does not match simulator");
  return kernels::omp::expectation(sv.amplitudes(), cuts_);
}

std::vector<std::uint64_t> QaoaSimulator::sample(const Statevector& sv, std::size_t shots,
                                                 Rng& rng) const {
  if (sv.num_qubits() != n_) throw InvalidArgument("statevector does not match simulator");
  if (shots < 1) throw InvalidArgument("need at least one shot");
  return draw_indices(kernels::omp::cumulative_probabilities(sv.amplitudes()), shots, rng);
}

}  // namespace paoa
