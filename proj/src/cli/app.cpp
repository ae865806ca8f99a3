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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "paoa/cli.hpp"
#include "paoa/errors.hpp"

namespace paoa::cli {

namespace {

struct FamilyOptions {
  std::string name;
  int n = 20;
  int k = 3;
  int m = 1;
  int seed_nodes = 2;
  double p_edge = 0.5;

  GraphFamily build() const { return make_family(name, n, k, m, seed_nodes, p_edge); }
};

void add_family_options(CLI::App& cmd, FamilyOptions& f) {
  cmd.add_option("--n", f.n, "Number of vertices")->capture_default_str();
  cmd.add_option("--k", f.k, "Degree for --family regular")->capture_default_str();
  cmd.add_option("--m", f.m, "Links per new node for --family ba")->capture_default_str();
  cmd.add_option("--seed-nodes", f.seed_nodes, "Initial path length for --family ba")
      ->capture_default_str();
  cmd.add_option("--p-edge", f.p_edge, "Edge probability for --family er")
      ->capture_default_str();
}

void add_run_options(CLI::App& cmd, RunConfig& run, std::string& out, std::string& config) {
  cmd.add_option("--seed", run.seed, "Master seed")->capture_default_str();
  cmd.add_option("--trials", run.trials, "Independent trials per method")->capture_default_str();
  cmd.add_option("--iterations", run.iterations, "SPSA iterations")->capture_default_str();
  cmd.add_option("--shots", run.shots, "Circuit executions per evaluation")
      ->capture_default_str();
  cmd.add_option("--out", out, "Output CSV path");
  cmd.add_option("--max-qubits", run.max_qubits, "Statevector size cap")->capture_default_str();
  cmd.add_option("--spsa-a", run.spsa_a, "SPSA gain numerator")->capture_default_str();
  cmd.add_option("--spsa-c", run.spsa_c, "SPSA perturbation size")->capture_default_str();
  cmd.add_option("--spsa-alpha", run.spsa_alpha, "SPSA gain decay")->capture_default_str();
  cmd.add_option("--spsa-gamma", run.spsa_gamma, "SPSA perturbation decay")
      ->capture_default_str();
  cmd.add_option("--config", config, "Flat key=value file; command-line flags take precedence")
      ->configurable(false)
      ->check(CLI::ExistingFile);
  cmd.allow_config_extras(false);
}

// Fills options not given on the command line from the subcommand's config
// file.
void apply_config(CLI::App& cmd, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  cmd.parse_from_stream(in);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Probabilistic and quantum variational circuits for Max-Cut"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  // generate
  FamilyOptions gen_family;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a graph file");
  gen->add_option("--family", gen_family.name, "ring | regular | complete | ba | er")->required();
  add_family_options(*gen, gen_family);
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output graph file")->required();

  // bench
  FamilyOptions bench_family;
  std::string bench_graph;
  std::string bench_methods = "bruteforce,random,paoa,reduced,min:1,min:3,qaoa:1,qaoa:3,qaoa:6";
  BenchmarkSpec bench_spec;
  auto* bench = app.add_subcommand("bench", "Run every method on one graph");
  auto* bench_fam_opt =
      bench->add_option("--family", bench_family.name, "ring | regular | complete | ba | er");
  bench->add_option("--graph", bench_graph, "Graph file instead of a family")
      ->excludes(bench_fam_opt);
  add_family_options(*bench, bench_family);
  bench->add_option("--methods", bench_methods, "Comma-separated methods")->capture_default_str();
  std::string bench_config;
  add_run_options(*bench, bench_spec.run, bench_spec.out, bench_config);

  // sweep
  FamilyOptions sweep_family;
  std::vector<int> sweep_sizes;
  std::string sweep_methods = "random,reduced";
  SweepSpec sweep_spec{Ring{3}, {}, {}, {}, {}};
  sweep_spec.run.trials = 10;
  auto* sweep = app.add_subcommand("sweep", "Run methods over graphs of increasing size");
  sweep->add_option("--family", sweep_family.name, "ring | regular | complete | ba | er");
  add_family_options(*sweep, sweep_family);
  sweep->add_option("--sizes", sweep_sizes, "Ascending vertex counts")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sweep->add_option("--methods", sweep_methods, "Comma-separated methods")->capture_default_str();
  std::string sweep_config;
  add_run_options(*sweep, sweep_spec.run, sweep_spec.out, sweep_config);

  try {
    app.parse(argc, argv);
    if (*bench) apply_config(*bench, bench_config);
    if (*sweep) apply_config(*sweep, sweep_config);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen) {
      cmd_generate(gen_family.build(), gen_seed, gen_out, std::cout);
    } else if (*bench) {
      if (bench_family.name.empty() && bench_graph.empty()) {
        throw InvalidArgument("bench needs --family or --graph");
      }
      if (!bench_family.name.empty()) bench_spec.family = bench_family.build();
      bench_spec.graph_path = bench_graph;
      bench_spec.methods = Method::parse_list(bench_methods);
      cmd_bench(bench_spec, std::cout);
    } else if (*sweep) {
      sweep_spec.family = sweep_family.build();
      sweep_spec.sizes = sweep_sizes;
      sweep_spec.methods = Method::parse_list(sweep_methods);
      cmd_sweep(sweep_spec, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace paoa::cli
