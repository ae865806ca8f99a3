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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "paoa/cli.hpp"
#include "paoa/errors.hpp"

using namespace paoa;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "paoa_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

int run_binary(const std::string& args) {
  const char* bin = std::getenv("PAOA_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "PAOA_BIN not set");
  const std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

cli::BenchmarkSpec small_bench(const fs::path& out) {
  cli::BenchmarkSpec spec;
  spec.family = Ring{8};
  spec.methods = Method::parse_list("bruteforce,random,reduced,min:1,qaoa:1");
  spec.run.trials = 3;
  spec.run.iterations = 10;
  spec.run.shots = 50;
  spec.run.seed = 17;
  spec.out = out.string();
  return spec;
}

}  // namespace

TEST_CASE("generate writes the graph file") {
  std::ostringstream log;
  const auto k10 = scratch("k10.txt");
  cli::cmd_generate(Complete{10}, 0, k10.string(), log);
  CHECK(lines_of(slurp(k10)).front() == "10 45");
  CHECK(log.str() == "10 45\n");

  const auto ring = scratch("ring20.txt");
  cli::cmd_generate(Ring{20}, 0, ring.string(), log);
  CHECK(lines_of(slurp(ring)).size() == 21);

  const auto er1 = scratch("er_a.txt");
  const auto er2 = scratch("er_b.txt");
  cli::cmd_generate(ErdosRenyi{20, 0.5}, 7, er1.string(), log);
  cli::cmd_generate(ErdosRenyi{20, 0.5}, 7, er2.string(), log);
  CHECK(slurp(er1) == slurp(er2));

  CHECK_THROWS_AS(cli::make_family("lattice", 10, 3, 1, 2, 0.5), InvalidArgument);
  CHECK(family_label(cli::make_family("regular", 20, 3, 1, 2, 0.5)) == "regular-20-3");
}

TEST_CASE("bench output is complete and byte-identical across runs") {
  std::ostringstream log;
  const auto a = scratch("bench_a.csv");
  const auto b = scratch("bench_b.csv");
  const auto report = cli::cmd_bench(small_bench(a), log);
  cli::cmd_bench(small_bench(b), log);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(scratch("bench_a_best.csv")) == slurp(scratch("bench_b_best.csv")));

  const auto rows = lines_of(slurp(a));
  CHECK(rows.front() == cli::kTrialCsvHeader);
  CHECK(rows.size() == 1 + 5 * 3);
  CHECK(rows[1].rfind("bruteforce,ring-8,8,8,0,8,4.000000,", 0) == 0);

  REQUIRE(report.rows.size() == 5);
  CHECK(report.rows[0].summary.best == 8);
  CHECK(report.rows[0].summary.average == 4.0);
  for (const auto& row : report.rows) {
    CHECK_FALSE(row.skipped);
    REQUIRE(row.ratio_true.has_value());
    CHECK(*row.ratio_true == doctest::Approx(row.summary.average / 8));
  }
  const std::string md = slurp(scratch("bench_a.md"));
  CHECK(md.find("| Method | Best | Average | SD | R | R_true |") != std::string::npos);
  CHECK(md.find("Min PAOA (1 layer)") != std::string::npos);
}

TEST_CASE("bench marks oversized QAOA rows as skipped") {
  std::ostringstream log;
  cli::BenchmarkSpec spec = small_bench(scratch("bench_30.csv"));
  spec.family = Ring{30};
  spec.methods = Method::parse_list("reduced,qaoa:1,qaoa:3");
  spec.run.trials = 1;
  const auto report = cli::cmd_bench(spec, log);
  REQUIRE(report.rows.size() == 3);
  CHECK_FALSE(report.rows[0].skipped);
  CHECK(report.rows[1].skipped);
  CHECK(report.rows[2].skipped);
  const std::string md = slurp(scratch("bench_30.md"));
  CHECK(md.find("Reduced PAOA") != std::string::npos);
  CHECK(md.find("skipped") != std::string::npos);
  CHECK(lines_of(slurp(scratch("bench_30.csv"))).size() == 2);
}

TEST_CASE("bench reads a graph file") {
  std::ostringstream log;
  const auto graph = scratch("c6.txt");
  cli::cmd_generate(Ring{6}, 0, graph.string(), log);
  cli::BenchmarkSpec spec = small_bench(scratch("bench_file.csv"));
  spec.family.reset();
  spec.graph_path = graph.string();
  spec.methods = Method::parse_list("bruteforce");
  const auto report = cli::cmd_bench(spec, log);
  CHECK(report.rows[0].summary.best == 6);
  spec.graph_path = scratch("missing.txt").string();
  CHECK_THROWS(cli::cmd_bench(spec, log));
}

TEST_CASE("sweep rows and per-size means") {
  std::ostringstream log;
  cli::SweepSpec spec{Ring{3}, {10, 20}, Method::parse_list("random,reduced"), {}, {}};
  spec.run.trials = 2;
  spec.run.iterations = 5;
  spec.out = scratch("sweep.csv").string();
  cli::cmd_sweep(spec, log);
  const auto rows = lines_of(slurp(scratch("sweep.csv")));
  CHECK(rows.front() == "size,method,trial,ratio,best_per_vertex");
  CHECK(rows.size() == 1 + 2 * 2 * 2 + 2 * 2);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto last = rows[i].rfind(',');
    const double per_vertex = std::stod(rows[i].substr(last + 1));
    CHECK(per_vertex <= 1.0);
    CHECK(per_vertex > 0.0);
  }

  cli::SweepSpec one{Ring{3}, {12}, Method::parse_list("random"), {}, scratch("one.csv").string()};
  one.run.trials = 1;
  cli::cmd_sweep(one, log);
  const auto one_rows = lines_of(slurp(scratch("one.csv")));
  int data = 0;
  for (const auto& r : one_rows) data += r.find(",mean,") == std::string::npos;
  CHECK(data - 1 == 1);

  cli::SweepSpec unsorted = one;
  unsorted.sizes = {20, 10};
  CHECK_THROWS_AS(cli::cmd_sweep(unsorted, log), InvalidArgument);
}

TEST_CASE("command-line exit codes and config file") {
  const auto graph = scratch("exe_ring.txt");
  CHECK(run_binary("generate --family ring --n 12 --out " + graph.string()) == 0);
  CHECK(lines_of(slurp(graph)).front() == "12 12");
  CHECK(run_binary("generate --family nonsense --n 12 --out " + graph.string()) != 0);
  CHECK(run_binary("bench --methods random") != 0);  // --out missing
  CHECK(run_binary("frobnicate") != 0);

  const auto cfg = scratch("run.cfg");
  std::ofstream(cfg) << "trials=2\niterations=3\nshots=20\nseed=5\n";
  const auto out = scratch("exe_bench.csv");
  CHECK(run_binary("bench --graph " + graph.string() + " --methods random,reduced --config " +
                   cfg.string() + " --out " + out.string()) == 0);
  CHECK(lines_of(slurp(out)).size() == 1 + 2 * 2);

  // Command-line flags override the file.
  CHECK(run_binary("bench --graph " + graph.string() + " --methods random --config " +
                   cfg.string() + " --trials 4 --out " + out.string()) == 0);
  CHECK(lines_of(slurp(out)).size() == 1 + 4);

  const auto typo = scratch("typo.cfg");
  std::ofstream(typo) << "trails=2\n";
  CHECK(run_binary("bench --graph " + graph.string() + " --methods random --config " +
                   typo.string() + " --out " + out.string()) != 0);
}
