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

#include "doctest.h"
#include "paoa/errors.hpp"
#include "paoa/spsa.hpp"

using namespace paoa;

namespace {

SpsaConfig unit_box(std::size_t dim, int iterations) {
  SpsaConfig cfg;
  cfg.iterations = iterations;
  cfg.box = Box::uniform(dim, 0.0, 1.0);
  return cfg;
}

double percentile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const auto idx = static_cast<std::size_t>(std::ceil(q * v.size())) - 1;
  return v[std::min(idx, v.size() - 1)];
}

}  // namespace

TEST_CASE("project clamps coordinatewise") {
  const Box box = Box::uniform(1, 0.0, 1.0);
  const double inside[] = {0.4};
  const double above[] = {1.3};
  const double below[] = {-0.2};
  CHECK(project(inside, box) == std::vector<double>{0.4});
  CHECK(project(above, box) == std::vector<double>{1.0});
  CHECK(project(below, box) == std::vector<double>{0.0});
  const Box mixed{{0.0, -1.0}, {1.0, 2.0}};
  const double x[] = {2.0, -3.0};
  CHECK(project(x, mixed) == std::vector<double>{1.0, -1.0});
}

TEST_CASE("1-d concave quadratic converges near its maximum") {
  std::vector<double> errors;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto trace = maximize([](std::span<const double> x) { return -(x[0] - 0.7) * (x[0] - 0.7); },
                                {0.1}, unit_box(1, 100), rng);
    errors.push_back(std::abs(trace.best_params[0] - 0.7));
  }
  CHECK(percentile(errors, 0.9) <= 0.05);
}

TEST_CASE("constant objective keeps every iterate in the box") {
  Rng rng(3);
  std::vector<std::vector<double>> evaluated;
  const SpsaConfig cfg = unit_box(3, 50);
  const auto trace = maximize(
      [&](std::span<const double> x) {
        evaluated.emplace_back(x.begin(), x.end());
        return 1.0;
      },
      {0.0, 0.5, 1.0}, cfg, rng);
  CHECK(trace.records.size() == 51);
  for (const auto& x : evaluated) CHECK(cfg.box.contains(x));
  bool found = false;
  for (const auto& r : trace.records) {
    CHECK(cfg.box.contains(r.params));
    found = found || r.params == trace.best_params;
  }
  CHECK(found);
  CHECK(trace.best_objective == 1.0);
}

TEST_CASE("zero iterations evaluates only x0") {
  Rng rng(1);
  int calls = 0;
  const auto trace = maximize(
      [&](std::span<const double> x) {
        ++calls;
        return x[0];
      },
      {0.25}, unit_box(1, 0), rng);
  CHECK(calls == 1);
  REQUIRE(trace.records.size() == 1);
  CHECK(trace.records[0].params == std::vector<double>{0.25});
  CHECK(trace.best_params == std::vector<double>{0.25});
  CHECK(trace.best_objective == 0.25);
}

TEST_CASE("trace bookkeeping and determinism") {
  auto noisy = [](std::uint64_t seed) {
    return [rng = Rng(seed)](std::span<const double> x) mutable {
      double s = 0;
      for (double v : x) s -= (v - 0.3) * (v - 0.3);
      return s + 0.05 * (rng.uniform() - 0.5);
    };
  };
  Rng r1(8), r2(8);
  const auto t1 = maximize(noisy(5), {0.9, 0.9, 0.9}, unit_box(3, 60), r1);
  const auto t2 = maximize(noisy(5), {0.9, 0.9, 0.9}, unit_box(3, 60), r2);
  REQUIRE(t1.records.size() == t2.records.size());
  for (std::size_t i = 0; i < t1.records.size(); ++i) {
    CHECK(t1.records[i].params == t2.records[i].params);
    CHECK(t1.records[i].objective == t2.records[i].objective);
  }
  double running = -INFINITY;
  for (std::size_t i = 0; i < t1.records.size(); ++i) {
    running = std::max(running, t1.records[i].objective);
    CHECK(t1.records[i].best_objective == running);
    if (i > 0) CHECK(t1.records[i].best_objective >= t1.records[i - 1].best_objective);
  }
  CHECK(t1.best_objective == running);
}

TEST_CASE("10-d noisy separable quadratic") {
  std::vector<double> medians;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::vector<double> target(10);
    Rng setup(100 + seed);
    for (auto& t : target) t = setup.uniform(0.2, 0.8);
    Rng noise(200 + seed);
    auto f = [&](std::span<const double> x) {
      double s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s -= (x[i] - target[i]) * (x[i] - target[i]);
      // Zero-mean noise with sd 0.1 (Box-Muller).
      const double u1 = 1.0 - noise.uniform();
      const double u2 = noise.uniform();
      return s + 0.1 * std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * u2);
    };
    Rng rng(seed);
    const auto trace = maximize(f, std::vector<double>(10, 0.5), unit_box(10, 200), rng);
    std::vector<double> err(10);
    for (int i = 0; i < 10; ++i) err[i] = std::abs(trace.best_params[i] - target[i]);
    std::nth_element(err.begin(), err.begin() + 5, err.end());
    medians.push_back(err[5]);
    CAPTURE(seed);
    CHECK(err[5] <= 0.1);
  }
}

TEST_CASE("non-finite objective aborts with the offending parameters") {
  Rng rng(0);
  int calls = 0;
  try {
    maximize(
        [&](std::span<const double>) { return ++calls < 4 ? 0.0 : NAN; }, {0.5, 0.5},
        unit_box(2, 10), rng);
    FAIL("expected NonFiniteObjective");
  } catch (const NonFiniteObjective& e) {
    CHECK(e.params().size() == 2);
    CHECK(calls == 4);
  }
}

TEST_CASE("configuration validation") {
  SpsaConfig cfg = unit_box(1, 10);
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.stability_constant() == doctest::Approx(1.0));
  cfg.stability = 3.0;
  CHECK(cfg.stability_constant() == 3.0);

  Rng rng(0);
  auto f = [](std::span<const double>) { return 0.0; };
  CHECK_THROWS_AS(maximize(f, {1.5}, unit_box(1, 10), rng), InvalidArgument);
  CHECK_THROWS_AS(maximize(f, {0.5, 0.5}, unit_box(1, 10), rng), InvalidArgument);

  auto bad = [](auto mutate) {
    SpsaConfig c = unit_box(1, 10);
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(bad([](SpsaConfig& c) { c.iterations = -1; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](SpsaConfig& c) { c.a = 0; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](SpsaConfig& c) { c.c = -1; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](SpsaConfig& c) { c.alpha = 0.05; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](SpsaConfig& c) { c.box.hi[0] = 0.0; }).validate(), InvalidArgument);
}
