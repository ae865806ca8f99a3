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

#include "paoa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "paoa/errors.hpp"
#include "paoa/kernels.hpp"

namespace paoa {

namespace {

void check_canonical(int n, const std::vector<Edge>& edges) {
  if (n < 1) throw InvalidArgument("graph needs at least one vertex");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.k < 0 || e.l >= n || e.k >= e.l) {
      throw InvalidArgument("edge (" + std::to_string(e.k) + "," + std::to_string(e.l) +
                            ") violates 0 <= k < l < n with n=" + std::to_string(n));
    }
    if (i > 0 && !(edges[i - 1] < e)) {
      throw InvalidArgument("edges not in strictly increasing lexicographic order at index " +
                            std::to_string(i));
    }
  }
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  check_canonical(n_, edges_);
}

Graph Graph::from_unordered(int n, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.k == e.l) throw InvalidArgument("self-loop at vertex " + std::to_string(e.k));
    if (e.k > e.l) std::swap(e.k, e.l);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidArgument("duplicate edge");
  }
  return Graph(n, std::move(edges));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.k];
    ++deg[e.l];
  }
  return deg;
}

int cut_value(const Graph& g, std::span<const std::uint8_t> s) {
  if (s.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw InvalidArgument("bit string length " + std::to_string(s.size()) +
                          " does not match n=" + std::to_string(g.num_vertices()));
  }
  int cut = 0;
  for (const Edge& e : g.edges()) cut += (s[e.k] != s[e.l]) ? 1 : 0;
  return cut;
}

BitString complement(std::span<const std::uint8_t> s) {
  BitString out(s.size());
  std::transform(s.begin(), s.end(), out.begin(), [](std::uint8_t b) { return b ? 0 : 1; });
  return out;
}

bool lex_less(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(std::span<const std::uint8_t> s) {
  std::string out(s.size(), '0');
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] ? '1' : '0';
  return out;
}

BitString bits_from_index(std::uint64_t index, int n) {
  BitString out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>((index >> i) & 1U);
  return out;
}

BruteForceResult brute_force(const Graph& g, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices) {
    throw ResourceLimit("brute force limited to n <= " + std::to_string(max_vertices) +
                        ", got n=" + std::to_string(n));
  }
  kernels::ScanResult scan = kernels::omp::brute_force_scan(g);

  BruteForceResult result;
  result.best = scan.best;
  result.witness = bits_from_index(scan.witness, n);
  // Every scanned string stands for itself and its complement.
  result.histogram.resize(scan.histogram.size());
  std::uint64_t s1 = 0;
  std::uint64_t s2 = 0;
  for (std::size_t c = 0; c < scan.histogram.size(); ++c) {
    result.histogram[c] = 2 * scan.histogram[c];
    s1 += scan.histogram[c] * c;
    s2 += scan.histogram[c] * c * c;
  }
  const double count = std::ldexp(1.0, n - 1);
  result.mean = static_cast<double>(g.num_edges()) / 2.0;
  const double variance = static_cast<double>(s2) / count -
                          (static_cast<double>(s1) / count) * (static_cast<double>(s1) / count);
  result.sd = std::sqrt(std::max(variance, 0.0));
  return result;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.k << ' ' << e.l << '\n';
}

Graph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("graph file is empty");
  std::istringstream header(line);
  long long n = 0;
  long long m = 0;
  if (!(header >> n >> m) || n < 1 || m < 0) {
    throw InvalidArgument("malformed graph header: '" + line + "'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) {
      throw InvalidArgument("graph file ends after " + std::to_string(i) + " of " +
                            std::to_string(m) + " edges");
    }
    std::istringstream row(line);
    Edge e;
    if (!(row >> e.k >> e.l)) throw InvalidArgument("malformed edge line: '" + line + "'");
    edges.push_back(e);
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw InvalidArgument("trailing content after " + std::to_string(m) + " edges");
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_graph(out, g);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_graph(in);
}

}  // namespace paoa
