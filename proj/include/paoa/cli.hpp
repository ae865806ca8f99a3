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
#include <optional>
#include <string>
#include <vector>

#include "paoa/graph.hpp"
#include "paoa/protocol.hpp"

namespace paoa::cli {

// Parses "ring", "regular", "complete", "ba", "er" plus size parameters.
GraphFamily make_family(const std::string& name, int n, int k, int m, int seed_nodes,
                        double p_edge);

struct BenchmarkSpec {
  std::optional<GraphFamily> family;  // either a family ...
  std::string graph_path;             // ... or a graph file
  std::vector<Method> methods;
  RunConfig run;
  std::string out;  // CSV path; Markdown and best-seen files share its stem
};

struct BenchRow {
  Method method;
  bool skipped = false;
  std::string skip_reason;
  SummaryRow summary;
  int best_seen = 0;
  std::optional<double> ratio_true;
};

struct BenchReport {
  std::string graph_name;
  Graph graph;
  std::vector<BenchRow> rows;
};

struct SweepSpec {
  GraphFamily family;  // vertex count replaced per size
  std::vector<int> sizes;
  std::vector<Method> methods;
  RunConfig run;  // trials defaults to 10 from the command line
  std::string out;
};

// Writes the graph file and prints "n |E|".
Graph cmd_generate(const GraphFamily& family, std::uint64_t seed, const std::string& out_path,
                   std::ostream& log);

BenchReport cmd_bench(const BenchmarkSpec& spec, std::ostream& log);

void cmd_sweep(const SweepSpec& spec, std::ostream& log);

inline constexpr const char* kTrialCsvHeader = "method,graph,n,edges,trial,best,mean,sd,ratio";

std::string markdown_table(const BenchReport& report);

// Command-line entry point; returns the process exit code.
int run(int argc, char** argv);

}  // namespace paoa::cli
