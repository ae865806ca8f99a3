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

#include "paoa/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <map>
#include <numbers>

#include "paoa/errors.hpp"
#include "paoa/pcircuit.hpp"
#include "paoa/spsa.hpp"

namespace paoa {

Method Method::paoa_min(int layers) {
  if (layers < 1) throw InvalidArgument("Min PAOA needs at least one layer");
  return Method(Kind::PaoaMin, layers);
}

Method Method::qaoa(int depth) {
  if (depth < 1) throw InvalidArgument("QAOA needs depth >= 1");
  return Method(Kind::Qaoa, depth);
}

Method Method::parse(std::string_view token) {
  std::string name(token.substr(0, token.find(':')));
  int depth = 1;
  if (const auto colon = token.find(':'); colon != std::string_view::npos) {
    const std::string arg(token.substr(colon + 1));
    try {
      std::size_t used = 0;
      depth = std::stoi(arg, &used);
      if (used != arg.size()) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("bad layer count in method '" + std::string(token) + "'");
    }
  }
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (name == "bruteforce" || name == "brute") return brute_force();
  if (name == "random") return random();
  if (name == "paoa" || name == "full") return paoa_full();
  if (name == "reduced") return paoa_reduced();
  if (name == "min") return paoa_min(depth);
  if (name == "qaoa") return qaoa(depth);
  throw InvalidArgument("unknown method '" + std::string(token) + "'");
}

std::vector<Method> Method::parse_list(std::string_view comma_separated) {
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= comma_separated.size()) {
    const auto end = std::min(comma_separated.find(',', start), comma_separated.size());
    const auto token = comma_separated.substr(start, end - start);
    if (!token.empty()) out.push_back(parse(token));
    start = end + 1;
  }
  if (out.empty()) throw InvalidArgument("no methods given");
  return out;
}

std::string Method::label() const {
  const std::string layers =
      " (" + std::to_string(depth_) + (depth_ == 1 ? " layer)" : " layers)");
  switch (kind_) {
    case Kind::BruteForce:
      return "Brute force";
    case Kind::Random:
      return "Random";
    case Kind::PaoaFull:
      return "PAOA";
    case Kind::PaoaReduced:
      return "Reduced PAOA";
    case Kind::PaoaMin:
      return "Min PAOA" + layers;
    case Kind::Qaoa:
      return "QAOA" + layers;
  }
  return "?";
}

std::string Method::token() const {
  switch (kind_) {
    case Kind::BruteForce:
      return "bruteforce";
    case Kind::Random:
      return "random";
    case Kind::PaoaFull:
      return "paoa";
    case Kind::PaoaReduced:
      return "reduced";
    case Kind::PaoaMin:
      return "min:" + std::to_string(depth_);
    case Kind::Qaoa:
      return "qaoa:" + std::to_string(depth_);
  }
  return "?";
}

void RunConfig::validate() const {
  if (iterations < 0) throw InvalidArgument("iterations must be >= 0");
  if (shots < 1) throw InvalidArgument("shots must be >= 1");
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
}

std::uint64_t trial_seed(std::uint64_t master, const Method& method, int trial) {
  return derive_seed(derive_seed(master, hash_label(method.token())),
                     static_cast<std::uint64_t>(trial));
}

void check_feasible(const Method& method, const Graph& g, const RunConfig& cfg) {
  const int n = g.num_vertices();
  if (method.kind() == Method::Kind::Qaoa && n > cfg.max_qubits) {
    throw ResourceLimit("QAOA simulation capped at " + std::to_string(cfg.max_qubits) +
                        " qubits, graph has " + std::to_string(n) + " vertices");
  }
  if (method.kind() == Method::Kind::BruteForce && n > cfg.brute_force_max_vertices) {
    throw ResourceLimit("brute force capped at " + std::to_string(cfg.brute_force_max_vertices) +
                        " vertices, graph has " + std::to_string(n));
  }
}

namespace {

SpsaConfig spsa_config(const RunConfig& cfg, Box box) {
  SpsaConfig spsa;
  spsa.iterations = cfg.iterations;
  spsa.a = cfg.spsa_a;
  spsa.c = cfg.spsa_c;
  spsa.alpha = cfg.spsa_alpha;
  spsa.gamma_exp = cfg.spsa_gamma;
  spsa.box = std::move(box);
  return spsa;
}

std::vector<double> uniform_start(const Box& box, Rng& rng) {
  std::vector<double> x(box.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(box.lo[i], box.hi[i]);
  return x;
}

TrialResult brute_force_trial(const Graph& g, const RunConfig& cfg) {
  const BruteForceResult bf = brute_force(g, cfg.brute_force_max_vertices);
  std::map<int, std::uint64_t> histogram;
  for (std::size_t c = 0; c < bf.histogram.size(); ++c)
    if (bf.histogram[c] > 0) histogram[static_cast<int>(c)] = bf.histogram[c];
  TrialResult r;
  r.stats = summarize(histogram);
  r.best_seen = bf.best;
  r.best_string = bf.witness;
  return r;
}

TrialResult random_trial(const Graph& g, const RunConfig& cfg, Rng& rng) {
  BestSeen best;
  std::vector<int> cuts(cfg.shots);
  BitString bits(g.num_vertices());
  for (int& c : cuts) {
    for (auto& b : bits) b = rng.bit() ? 1 : 0;
    c = cut_value(g, bits);
    best.offer(c, bits);
  }
  TrialResult r;
  r.stats = summarize(cuts);
  r.best_seen = best.cut;
  r.best_string = best.bits;
  return r;
}

Ansatz ansatz_of(Method::Kind kind) {
  switch (kind) {
    case Method::Kind::PaoaFull:
      return Ansatz::Full;
    case Method::Kind::PaoaReduced:
      return Ansatz::Reduced;
    default:
      return Ansatz::Min;
  }
}

TrialResult paoa_trial(const Method& method, const Graph& g, const RunConfig& cfg,
                       std::uint64_t seed) {
  const Ansatz ansatz = ansatz_of(method.kind());
  const std::size_t dim = AnsatzParams::dimension(ansatz, g, method.depth());
  Rng init_rng(derive_seed(seed, 1));
  Rng opt_rng(derive_seed(seed, 2));
  Rng eval_rng(derive_seed(seed, 3));

  BestSeen best;
  auto sample = [&](std::span<const double> x) {
    const auto params = AnsatzParams::of(ansatz, {x.begin(), x.end()});
    return estimate(g, params, cfg.shots, eval_rng, &best);
  };

  const SpsaConfig spsa = spsa_config(cfg, Box::uniform(dim, 0.0, 1.0));
  auto x0 = uniform_start(spsa.box, init_rng);
  const OptTrace trace =
      maximize([&](std::span<const double> x) { return sample(x).mean; }, std::move(x0), spsa,
               opt_rng);

  TrialResult r;
  r.stats = sample(trace.best_params);
  r.best_seen = best.cut;
  r.best_string = best.bits;
  r.params = trace.best_params;
  return r;
}

TrialResult qaoa_trial(const Method& method, const Graph& g, const RunConfig& cfg,
                       std::uint64_t seed) {
  const QaoaSimulator sim(g, cfg.max_qubits);
  const auto p = static_cast<std::size_t>(method.depth());
  Rng init_rng(derive_seed(seed, 1));
  Rng opt_rng(derive_seed(seed, 2));
  Rng eval_rng(derive_seed(seed, 3));

  BestSeen best;
  auto sample = [&](std::span<const double> x) {
    const Statevector sv = sim.run(QaoaParams::from_vector(x));
    const auto indices = sim.sample(sv, cfg.shots, eval_rng);
    std::vector<int> cuts(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
      cuts[i] = sim.cut_of(indices[i]);
      if (cuts[i] >= best.cut) best.offer(cuts[i], bits_from_index(indices[i], g.num_vertices()));
    }
    return summarize(cuts);
  };

  Box box = Box::uniform(2 * p, 0.0, std::numbers::pi);
  std::fill(box.hi.begin(), box.hi.begin() + p, 2.0 * std::numbers::pi);
  const SpsaConfig spsa = spsa_config(cfg, std::move(box));
  auto x0 = uniform_start(spsa.box, init_rng);
  const OptTrace trace =
      maximize([&](std::span<const double> x) { return sample(x).mean; }, std::move(x0), spsa,
               opt_rng);

  TrialResult r;
  r.stats = sample(trace.best_params);
  r.best_seen = best.cut;
  r.best_string = best.bits;
  r.params = trace.best_params;
  return r;
}

}  // namespace

TrialResult run_trial(const Method& method, const Graph& g, const RunConfig& cfg,
                      std::uint64_t seed) {
  cfg.validate();
  check_feasible(method, g, cfg);
  switch (method.kind()) {
    case Method::Kind::BruteForce:
      return brute_force_trial(g, cfg);
    case Method::Kind::Random: {
      Rng rng(derive_seed(seed, 3));
      return random_trial(g, cfg, rng);
    }
    case Method::Kind::PaoaFull:
    case Method::Kind::PaoaReduced:
    case Method::Kind::PaoaMin:
      return paoa_trial(method, g, cfg, seed);
    case Method::Kind::Qaoa:
      return qaoa_trial(method, g, cfg, seed);
  }
  throw InvalidArgument("unknown method");
}

std::vector<TrialResult> run_trials(const Method& method, const Graph& g, const RunConfig& cfg) {
  cfg.validate();
  check_feasible(method, g, cfg);
  std::vector<TrialResult> results(cfg.trials);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < cfg.trials; ++t) {
    try {
      results[t] = run_trial(method, g, cfg, trial_seed(cfg.seed, method, t));
    } catch (...) {
#pragma omp critical(paoa_trial_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

BitString best_string(const Graph& g, std::span<const BitString> seen) {
  if (seen.empty()) throw InvalidArgument("best_string needs at least one string");
  BestSeen best;
  for (const auto& s : seen) best.offer(cut_value(g, s), s);
  return best.bits;
}

SummaryRow aggregate(std::span<const SampleStats> trials) {
  if (trials.empty()) throw InvalidArgument("aggregate needs at least one trial");
  SummaryRow row;
  for (const auto& t : trials) {
    row.best = std::max(row.best, t.best);
    row.average += t.mean;
    row.sd += t.sd;
    row.ratio += t.ratio;
  }
  const auto n = static_cast<double>(trials.size());
  row.average /= n;
  row.sd /= n;
  row.ratio /= n;
  return row;
}

}  // namespace paoa
