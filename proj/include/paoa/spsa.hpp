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

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "paoa/rng.hpp"

namespace paoa {

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  static Box uniform(std::size_t dim, double lo, double hi);

  std::size_t dimension() const { return lo.size(); }
  bool contains(std::span<const double> x) const;
};

struct SpsaConfig {
  int iterations = 100;
  double a = 0.2;
  double c = 0.1;
  double alpha = 0.602;
  double gamma_exp = 0.101;
  std::optional<double> stability;  // A; defaults to 10% of iterations
  Box box;

  double stability_constant() const;
  // Throws InvalidArgument.
  void validate() const;
};

struct TraceRecord {
  std::vector<double> params;
  double objective = 0.0;
  double best_objective = 0.0;  // running maximum up to this record
};

struct OptTrace {
  std::vector<TraceRecord> records;  // records[0] is x0
  std::vector<double> best_params;
  double best_objective = 0.0;
};

// Noisy objective to be maximized. The optimizer only calls it with in-box
// points.
using Objective = std::function<double(std::span<const double>)>;

std::vector<double> project(std::span<const double> x, const Box& box);

// Two-probe SPSA ascent with clipping to the box. Each iteration evaluates
// the objective at x + c_k D, x - c_k D and at the new iterate.
OptTrace maximize(const Objective& objective, std::vector<double> x0, const SpsaConfig& cfg,
                  Rng& rng);

}  // namespace paoa
