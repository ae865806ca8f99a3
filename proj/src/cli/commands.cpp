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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "paoa/cli.hpp"
#include "paoa/errors.hpp"

namespace paoa::cli {

namespace fs = std::filesystem;

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string stem_of(const std::string& path) {
  fs::path p(path);
  return (p.parent_path() / p.stem()).string();
}

std::ofstream open_output(const std::string& path) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

void append_trial_rows(std::ostream& csv, const Method& method, const std::string& graph_name,
                       const Graph& g, const std::vector<TrialResult>& trials) {
  for (std::size_t t = 0; t < trials.size(); ++t) {
    const SampleStats& s = trials[t].stats;
    csv << method.token() << ',' << graph_name << ',' << g.num_vertices() << ','
        << g.num_edges() << ',' << t << ',' << s.best << ',' << fixed(s.mean, 6) << ','
        << fixed(s.sd, 6) << ',' << fixed(s.ratio, 6) << '\n';
  }
}

std::vector<SampleStats> stats_of(const std::vector<TrialResult>& trials) {
  std::vector<SampleStats> out;
  out.reserve(trials.size());
  for (const auto& t : trials) out.push_back(t.stats);
  return out;
}

}  // namespace

GraphFamily make_family(const std::string& name, int n, int k, int m, int seed_nodes,
                        double p_edge) {
  if (name == "ring") return Ring{n};
  if (name == "regular") return RandomRegular{n, k};
  if (name == "complete") return Complete{n};
  if (name == "ba") return BarabasiAlbert{n, m, seed_nodes};
  if (name == "er") return ErdosRenyi{n, p_edge};
  throw InvalidArgument("unknown graph family '" + name +
                        "' (expected ring, regular, complete, ba, er)");
}

Graph cmd_generate(const GraphFamily& family, std::uint64_t seed, const std::string& out_path,
                   std::ostream& log) {
  Graph g = generate(family, seed);
  auto out = open_output(out_path);
  write_graph(out, g);
  if (!out) throw std::runtime_error("write to '" + out_path + "' failed");
  log << g.num_vertices() << ' ' << g.num_edges() << '\n';
  return g;
}

std::string markdown_table(const BenchReport& report) {
  bool with_true = false;
  for (const auto& row : report.rows) with_true = with_true || row.ratio_true.has_value();

  std::ostringstream md;
  md << "| Method | Best | Average | SD | R |" << (with_true ? " R_true |" : "") << " Best seen |\n";
  md << "|---|---:|---:|---:|---:|" << (with_true ? "---:|" : "") << "---:|\n";
  for (const auto& row : report.rows) {
    md << "| " << row.method.label() << " | ";
    if (row.skipped) {
      md << "skipped | | | |" << (with_true ? " |" : "") << " |\n";
      continue;
    }
    const SummaryRow& s = row.summary;
    md << s.best << " | " << fixed(s.average, 2) << " | " << fixed(s.sd, 2) << " | "
       << fixed(s.ratio, 2) << " |";
    if (with_true) md << ' ' << (row.ratio_true ? fixed(*row.ratio_true, 2) : "") << " |";
    md << ' ' << row.best_seen << " |\n";
  }
  return md.str();
}

BenchReport cmd_bench(const BenchmarkSpec& spec, std::ostream& log) {
  if (spec.methods.empty()) throw InvalidArgument("bench needs at least one method");
  if (spec.out.empty()) throw InvalidArgument("bench needs an output path");
  spec.run.validate();

  BenchReport report{
      spec.family ? family_label(*spec.family) : fs::path(spec.graph_path).stem().string(),
      spec.family ? generate(*spec.family, spec.run.seed) : load_graph(spec.graph_path),
      {}};
  const Graph& g = report.graph;
  log << "graph " << report.graph_name << ": n=" << g.num_vertices()
      << " |E|=" << g.num_edges() << '\n';

  const std::string stem = stem_of(spec.out);
  auto csv = open_output(spec.out);
  auto best_csv = open_output(stem + "_best.csv");
  csv << kTrialCsvHeader << '\n';
  best_csv << "method,trial,best_seen,best_string\n";

  std::optional<int> optimum;
  for (const Method& method : spec.methods) {
    BenchRow row{method, false, {}, {}, 0, std::nullopt};
    std::vector<TrialResult> trials;
    try {
      trials = run_trials(method, g, spec.run);
    } catch (const ResourceLimit& e) {
      row.skipped = true;
      row.skip_reason = e.what();
      log << method.label() << ": skipped (" << e.what() << ")\n";
      report.rows.push_back(row);
      continue;
    }
    append_trial_rows(csv, method, report.graph_name, g, trials);
    for (std::size_t t = 0; t < trials.size(); ++t) {
      best_csv << method.token() << ',' << t << ',' << trials[t].best_seen << ','
               << to_string(trials[t].best_string) << '\n';
      row.best_seen = std::max(row.best_seen, trials[t].best_seen);
    }
    const auto stats = stats_of(trials);
    row.summary = aggregate(stats);
    if (method.kind() == Method::Kind::BruteForce) optimum = row.summary.best;
    log << method.label() << ": done (" << trials.size() << " trials)\n";
    report.rows.push_back(row);
  }

  if (optimum && *optimum > 0) {
    for (auto& row : report.rows)
      if (!row.skipped) row.ratio_true = row.summary.average / *optimum;
  }

  const std::string table = markdown_table(report);
  auto md = open_output(stem + ".md");
  md << "## " << report.graph_name << " (n=" << g.num_vertices() << ", |E|=" << g.num_edges()
     << ")\n\n"
     << table;
  log << '\n' << table;
  if (!csv || !md || !best_csv) throw std::runtime_error("writing bench outputs failed");
  return report;
}

void cmd_sweep(const SweepSpec& spec, std::ostream& log) {
  if (spec.methods.empty()) throw InvalidArgument("sweep needs at least one method");
  if (spec.sizes.empty()) throw InvalidArgument("sweep needs at least one size");
  if (spec.out.empty()) throw InvalidArgument("sweep needs an output path");
  for (std::size_t i = 1; i < spec.sizes.size(); ++i) {
    if (spec.sizes[i] <= spec.sizes[i - 1]) throw InvalidArgument("sweep sizes must ascend");
  }
  spec.run.validate();

  auto csv = open_output(spec.out);
  csv << "size,method,trial,ratio,best_per_vertex\n";
  std::ostringstream means;
  for (int size : spec.sizes) {
    RunConfig run = spec.run;
    run.seed = derive_seed(spec.run.seed, static_cast<std::uint64_t>(size));
    const Graph g = generate(with_size(spec.family, size), run.seed);
    for (const Method& method : spec.methods) {
      std::vector<TrialResult> trials;
      try {
        trials = run_trials(method, g, run);
      } catch (const ResourceLimit& e) {
        log << "size " << size << ' ' << method.label() << ": skipped (" << e.what() << ")\n";
        continue;
      }
      double ratio_sum = 0.0;
      double per_vertex_sum = 0.0;
      for (std::size_t t = 0; t < trials.size(); ++t) {
        const double per_vertex = static_cast<double>(trials[t].stats.best) / size;
        csv << size << ',' << method.token() << ',' << t << ','
            << fixed(trials[t].stats.ratio, 6) << ',' << fixed(per_vertex, 6) << '\n';
        ratio_sum += trials[t].stats.ratio;
        per_vertex_sum += per_vertex;
      }
      const double count = static_cast<double>(trials.size());
      means << size << ',' << method.token() << ",mean," << fixed(ratio_sum / count, 6) << ','
            << fixed(per_vertex_sum / count, 6) << '\n';
      log << "size " << size << ' ' << method.label() << ": mean R "
          << fixed(ratio_sum / count, 4) << ", mean best/|V| " << fixed(per_vertex_sum / count, 4)
          << '\n';
    }
  }
  csv << means.str();
  if (!csv) throw std::runtime_error("writing sweep output failed");
}

}  // namespace paoa::cli
