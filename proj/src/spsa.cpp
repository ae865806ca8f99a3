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

#include "paoa/spsa.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "paoa/errors.hpp"

namespace paoa {

Box Box::uniform(std::size_t dim, double lo, double hi) {
  return Box{std::vector<double>(dim, lo), std::vector<double>(dim, hi)};
}

bool Box::contains(std::span<const double> x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] >= lo[i] && x[i] <= hi[i])) return false;
  return true;
}

double SpsaConfig::stability_constant() const {
  return stability ? *stability : 0.1 * iterations;
}

void SpsaConfig::validate() const {
  if (iterations < 0) throw InvalidArgument("SPSA iterations must be >= 0");
  if (!(a > 0.0 && c > 0.0)) throw InvalidArgument("SPSA gains a and c must be positive");
  if (!(alpha > gamma_exp && gamma_exp > 0.0)) {
    throw InvalidArgument("SPSA exponents need alpha > gamma > 0");
  }
  if (stability_constant() < 0.0) throw InvalidArgument("SPSA stability constant must be >= 0");
  if (box.lo.size() != box.hi.size()) throw InvalidArgument("box bounds differ in length");
  for (std::size_t i = 0; i < box.lo.size(); ++i) {
    if (!(box.lo[i] < box.hi[i])) throw InvalidArgument("box needs lo < hi in every coordinate");
  }
}

std::vector<double> project(std::span<const double> x, const Box& box) {
  if (x.size() != box.dimension()) throw InvalidArgument("point and box differ in dimension");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::clamp(x[i], box.lo[i], box.hi[i]);
  return out;
}

namespace {

double evaluate(const Objective& objective, const std::vector<double>& x) {
  const double f = objective(x);
  if (!std::isfinite(f)) {
    std::ostringstream msg;
    msg << "objective returned " << f << " at params (";
    for (std::size_t i = 0; i < x.size(); ++i) msg << (i ? ", " : "") << x[i];
    msg << ")";
    throw NonFiniteObjective(msg.str(), x);
  }
  return f;
}

}  // namespace

OptTrace maximize(const Objective& objective, std::vector<double> x0, const SpsaConfig& cfg,
                  Rng& rng) {
  cfg.validate();
  if (!cfg.box.contains(x0)) throw InvalidArgument("SPSA start point lies outside the box");

  const std::size_t dim = x0.size();
  const double stability = cfg.stability_constant();

  OptTrace trace;
  std::vector<double> x = std::move(x0);
  double fx = evaluate(objective, x);
  trace.best_params = x;
  trace.best_objective = fx;
  trace.records.push_back({x, fx, fx});

  std::vector<double> delta(dim);
  std::vector<double> plus(dim);
  std::vector<double> minus(dim);
  for (int k = 0; k < cfg.iterations; ++k) {
    const double ak = cfg.a / std::pow(k + 1 + stability, cfg.alpha);
    const double ck = cfg.c / std::pow(k + 1, cfg.gamma_exp);

    for (std::size_t i = 0; i < dim; ++i) {
      delta[i] = rng.bit() ? 1.0 : -1.0;
      plus[i] = x[i] + ck * delta[i];
      minus[i] = x[i] - ck * delta[i];
    }
    plus = project(plus, cfg.box);
    minus = project(minus, cfg.box);
    const double diff = evaluate(objective, plus) - evaluate(objective, minus);

    // Delta_i is +-1, so dividing by it is multiplying by it.
    for (std::size_t i = 0; i < dim; ++i) x[i] += ak * diff / (2.0 * ck) * delta[i];
    x = project(x, cfg.box);

    fx = evaluate(objective, x);
    if (fx > trace.best_objective) {
      trace.best_objective = fx;
      trace.best_params = x;
    }
    trace.records.push_back({x, fx, trace.best_objective});
  }
  return trace;
}

}  // namespace paoa
