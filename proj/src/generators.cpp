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
#include <cstdio>
#include <set>

#include "paoa/errors.hpp"
#include "paoa/graph.hpp"

namespace paoa {

namespace {

Graph ring(const Ring& f) {
  if (f.n < 3) throw InvalidArgument("ring needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < f.n; ++i) edges.push_back({i, (i + 1) % f.n});
  return Graph::from_unordered(f.n, std::move(edges));
}

Graph complete(const Complete& f) {
  if (f.n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int k = 0; k < f.n; ++k)
    for (int l = k + 1; l < f.n; ++l) edges.push_back({k, l});
  return Graph(f.n, std::move(edges));
}

// Configuration model: pair shuffled degree stubs, restart from scratch on
// any self-loop or repeated pair.
Graph random_regular(const RandomRegular& f, Rng& rng, int restart_budget) {
  if (f.n < 1 || f.k < 0 || f.k >= f.n || (static_cast<long long>(f.n) * f.k) % 2 != 0) {
    throw InvalidArgument("random regular graph needs n >= 1, 0 <= k < n and n*k even");
  }
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(f.n) * f.k);
  for (int v = 0; v < f.n; ++v) stubs.insert(stubs.end(), f.k, v);

  for (int attempt = 0; attempt < restart_budget; ++attempt) {
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::swap(stubs[i - 1], stubs[rng.below(i)]);
    }
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      int k = stubs[i];
      int l = stubs[i + 1];
      if (k == l) {
        simple = false;
        break;
      }
      if (k > l) std::swap(k, l);
      simple = seen.insert({k, l}).second;
    }
    if (simple) return Graph(f.n, std::vector<Edge>(seen.begin(), seen.end()));
  }
  throw GenerationFailure("random regular graph (n=" + std::to_string(f.n) +
                          ", k=" + std::to_string(f.k) + ") not found within " +
                          std::to_string(restart_budget) + " restarts");
}

// Preferential attachment. The seed nodes form a path; each later node links
// to m distinct earlier nodes drawn with probability proportional to degree
// (uniformly while every degree is still zero).
Graph barabasi_albert(const BarabasiAlbert& f, Rng& rng) {
  if (!(1 <= f.m && f.m <= f.seed_nodes && f.seed_nodes <= f.n)) {
    throw InvalidArgument("Barabasi-Albert needs 1 <= m <= seed_nodes <= n");
  }
  std::vector<Edge> edges;
  std::vector<int> endpoints;  // vertex v appears deg(v) times
  for (int v = 0; v + 1 < f.seed_nodes; ++v) {
    edges.push_back({v, v + 1});
    endpoints.push_back(v);
    endpoints.push_back(v + 1);
  }
  for (int v = f.seed_nodes; v < f.n; ++v) {
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < f.m) {
      const int u = endpoints.empty() ? static_cast<int>(rng.below(v))
                                      : endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), u) == targets.end()) targets.push_back(u);
    }
    for (int u : targets) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  return Graph::from_unordered(f.n, std::move(edges));
}

Graph erdos_renyi(const ErdosRenyi& f, Rng& rng) {
  if (f.n < 1) throw InvalidArgument("Erdos-Renyi graph needs n >= 1");
  if (!(f.p_edge >= 0.0 && f.p_edge <= 1.0)) {
    throw InvalidArgument("Erdos-Renyi edge probability must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  for (int k = 0; k < f.n; ++k)
    for (int l = k + 1; l < f.n; ++l)
      if (rng.uniform() < f.p_edge) edges.push_back({k, l});
  return Graph(f.n, std::move(edges));
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Graph generate(const GraphFamily& family, std::uint64_t seed, int restart_budget) {
  Rng rng(seed);
  return std::visit(
      Overloaded{
          [](const Ring& f) { return ring(f); },
          [](const Complete& f) { return complete(f); },
          [&](const RandomRegular& f) { return random_regular(f, rng, restart_budget); },
          [&](const BarabasiAlbert& f) { return barabasi_albert(f, rng); },
          [&](const ErdosRenyi& f) { return erdos_renyi(f, rng); },
      },
      family);
}

std::string family_label(const GraphFamily& family) {
  return std::visit(
      Overloaded{
          [](const Ring& f) { return "ring-" + std::to_string(f.n); },
          [](const Complete& f) { return "complete-" + std::to_string(f.n); },
          [](const RandomRegular& f) {
            return "regular-" + std::to_string(f.n) + "-" + std::to_string(f.k);
          },
          [](const BarabasiAlbert& f) {
            return "ba-" + std::to_string(f.n) + "-" + std::to_string(f.m) + "-" +
                   std::to_string(f.seed_nodes);
          },
          [](const ErdosRenyi& f) {
            return "er-" + std::to_string(f.n) + "-" + format_probability(f.p_edge);
          },
      },
      family);
}

GraphFamily with_size(const GraphFamily& family, int n) {
  GraphFamily out = family;
  std::visit([n](auto& f) { f.n = n; }, out);
  return out;
}

}  // namespace paoa
