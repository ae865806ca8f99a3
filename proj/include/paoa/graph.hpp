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
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "paoa/rng.hpp"

namespace paoa {

// Vertex labels z_0 .. z_{n-1}, each 0 or 1.
using BitString = std::vector<std::uint8_t>;

struct Edge {
  int k = 0;
  int l = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph with edges stored in canonical order: k < l,
// lexicographically sorted, no duplicates. Gate application order downstream
// follows this order, so it is part of the graph's identity.
class Graph {
 public:
  // Throws InvalidArgument unless `edges` is already canonical.
  Graph(int n, std::vector<Edge> edges);

  // Accepts edges in any order/orientation; rejects self-loops and duplicates.
  static Graph from_unordered(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::vector<int> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

// Number of edges whose endpoints carry different labels.
int cut_value(const Graph& g, std::span<const std::uint8_t> s);

BitString complement(std::span<const std::uint8_t> s);

// Lexicographic comparison with z_0 as the most significant position.
bool lex_less(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

std::string to_string(std::span<const std::uint8_t> s);

// Bits of a basis index: bit i of `index` becomes z_i.
BitString bits_from_index(std::uint64_t index, int n);

inline constexpr int kBruteForceMaxVertices = 30;

struct BruteForceResult {
  int best = 0;
  BitString witness;  // lexicographically smallest maximizer
  double mean = 0.0;  // uniform-distribution moments over all 2^n strings
  double sd = 0.0;
  // histogram[c] = number of the 2^n strings with cut value c.
  std::vector<std::uint64_t> histogram;
};

// Exhaustive Max-Cut. Throws ResourceLimit when n exceeds the guard.
BruteForceResult brute_force(const Graph& g, int max_vertices = kBruteForceMaxVertices);

// Graph families.
struct Ring {
  int n;
};
struct RandomRegular {
  int n;
  int k;
};
struct Complete {
  int n;
};
struct BarabasiAlbert {
  int n;
  int m = 1;
  int seed_nodes = 2;
};
struct ErdosRenyi {
  int n;
  double p_edge;
};

using GraphFamily = std::variant<Ring, RandomRegular, Complete, BarabasiAlbert, ErdosRenyi>;

inline constexpr int kRegularRestartBudget = 10000;

// Throws InvalidArgument on infeasible parameters; GenerationFailure when the
// configuration model exhausts `restart_budget`.
Graph generate(const GraphFamily& family, std::uint64_t seed,
               int restart_budget = kRegularRestartBudget);

// Short identifier such as "ring-20" or "er-20-0.5".
std::string family_label(const GraphFamily& family);

// Same family with its vertex count replaced (used by size sweeps).
GraphFamily with_size(const GraphFamily& family, int n);

// Text format: "n m" header, then m lines "k l".
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);
void save_graph(const std::string& path, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace paoa
