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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paoa/graph.hpp"
#include "paoa/qsim.hpp"
#include "paoa/sample_stats.hpp"

namespace paoa {

class Method {
 public:
  enum class Kind { BruteForce, Random, PaoaFull, PaoaReduced, PaoaMin, Qaoa };

  static Method brute_force() { return Method(Kind::BruteForce, 1); }
  static Method random() { return Method(Kind::Random, 1); }
  static Method paoa_full() { return Method(Kind::PaoaFull, 1); }
  static Method paoa_reduced() { return Method(Kind::PaoaReduced, 1); }
  static Method paoa_min(int layers);
  static Method qaoa(int depth);

  // Accepts bruteforce, random, paoa, reduced, min[:L], qaoa[:p].
  static Method parse(std::string_view token);
  static std::vector<Method> parse_list(std::string_view comma_separated);

  Kind kind() const { return kind_; }
  int depth() const { return depth_; }

  std::string label() const;  // "Min PAOA (3 layers)"
  std::string token() const;  // "min:3"

  friend bool operator==(const Method&, const Method&) = default;

 private:
  Method(Kind kind, int depth) : kind_(kind), depth_(depth) {}

  Kind kind_;
  int depth_;
};

struct RunConfig {
  int iterations = 100;
  int shots = 100;
  int trials = 100;
  std::uint64_t seed = 0;
  // SPSA gains; the stability constant defaults to 10% of iterations.
  double spsa_a = 0.2;
  double spsa_c = 0.1;
  double spsa_alpha = 0.602;
  double spsa_gamma = 0.101;
  int max_qubits = kDefaultMaxQubits;
  int brute_force_max_vertices = kBruteForceMaxVertices;

  void validate() const;
};

struct TrialResult {
  SampleStats stats;        // final evaluation sample
  int best_seen = 0;        // best cut anywhere in the trial, probes included
  BitString best_string;
  std::vector<double> params;  // parameters of the final evaluation
};

// Independent stream per (master seed, method, trial index).
std::uint64_t trial_seed(std::uint64_t master, const Method& method, int trial);

// Throws ResourceLimit when the method cannot run on `g` under `cfg`.
void check_feasible(const Method& method, const Graph& g, const RunConfig& cfg);

TrialResult run_trial(const Method& method, const Graph& g, const RunConfig& cfg,
                      std::uint64_t seed);

// cfg.trials trials, run in parallel; result order follows trial index.
std::vector<TrialResult> run_trials(const Method& method, const Graph& g, const RunConfig& cfg);

// Highest-cut string among `seen`, lexicographically smallest on ties.
// Throws InvalidArgument on an empty list.
BitString best_string(const Graph& g, std::span<const BitString> seen);

struct SummaryRow {
  int best = 0;
  double average = 0.0;
  double sd = 0.0;
  double ratio = 0.0;
};

// Best = max of trial bests; Average, SD, R = means over trials.
SummaryRow aggregate(std::span<const SampleStats> trials);

}  // namespace paoa
