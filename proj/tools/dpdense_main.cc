// Copyright 2026 The dpdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: run, gen, fetch and audit.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpdense/algorithm.h"
#include "dpdense/audit.h"
#include "dpdense/experiment.h"
#include "dpdense/graph.h"
#include "dpdense/random.h"
#include "fetch.h"

namespace dpdense {
namespace {

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status.ToString() << "\n";
  return status.code() == absl::StatusCode::kInvalidArgument ? kExitUsage
                                                             : kExitIo;
}

struct RunArgs {
  std::string algo = "seq";
  std::string graph;
  bool remap = false;
  std::vector<double> eps = {1.0};
  std::vector<double> delta = {1e-6};
  int trials = 1;
  uint64_t seed = 0;
  int64_t max_iters = 1'000'000;
  std::string out = "results.csv";
  int jobs = 1;
  std::string trace;
  std::string mr_trace;
  bool wall_time = false;
};

void WarnParams(Algorithm algorithm, const std::vector<double>& eps,
                const std::vector<double>& delta, int64_t n) {
  for (double e : eps) {
    if (!(e > 0.0 && e <= 1.0)) {
      std::cerr << "warning: epsilon=" << e
                << " is outside (0, 1]; the privacy analysis assumes it is "
                   "not\n";
    }
  }
  if (algorithm == Algorithm::kPhase || algorithm == Algorithm::kMr) {
    const double lo = n > 0 ? 2.0 / (static_cast<double>(n) * n) : 0.0;
    for (double d : delta) {
      if (!(d > lo && d < 1.0)) {
        std::cerr << "warning: delta=" << d
                  << " is outside (2/n^2, 1) for n=" << n << "\n";
      }
    }
  }
}

absl::Status WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::UnavailableError("cannot write " + path);
  out << text;
  out.close();
  if (!out) return absl::UnavailableError("write failed: " + path);
  return absl::OkStatus();
}

int DoRun(const RunArgs& args) {
  auto algorithm = ParseAlgorithm(args.algo);
  if (!algorithm.ok()) return Fail(algorithm.status());
  auto source = LoadGraphSpec(args.graph, args.remap);
  if (!source.ok()) return Fail(source.status());

  ExperimentConfig config;
  config.dataset = source->name;
  config.algorithm = *algorithm;
  config.epsilons = args.eps;
  config.deltas = args.delta;
  config.trials = args.trials;
  config.master_seed = args.seed;
  config.max_iters = args.max_iters;
  config.jobs = args.jobs;
  config.wall_time = args.wall_time;
  config.trace = !args.trace.empty();
  config.mr_trace = !args.mr_trace.empty();
  if (absl::Status s = config.Validate(); !s.ok()) return Fail(s);

  if (IsPrivate(*algorithm)) {
    WarnParams(*algorithm, args.eps, args.delta, source->graph.num_nodes());
    if (args.trials > 1) {
      std::cerr << "note: " << args.trials
                << " trials per setting are independent executions on the "
                   "same graph; releasing all of them costs the sum of their "
                   "privacy budgets\n";
    }
  }

  auto rows = RunExperiment(config, source->graph);
  if (!rows.ok()) return Fail(rows.status());
  if (absl::Status s = WriteExperiment(*rows, args.out); !s.ok()) {
    return Fail(s);
  }
  if (config.trace) {
    std::string text;
    for (const TrialRow& row : *rows) text += row.trace_json + "\n";
    if (absl::Status s = WriteText(args.trace, text); !s.ok()) return Fail(s);
  }
  if (config.mr_trace) {
    std::string text;
    for (const TrialRow& row : *rows) text += row.mr_trace_jsonl;
    if (absl::Status s = WriteText(args.mr_trace, text); !s.ok()) {
      return Fail(s);
    }
  }
  std::cerr << "wrote " << rows->size() << " rows to " << args.out << "\n";
  return 0;
}

int DoGen(const std::string& spec, const std::string& out) {
  if (!IsGeneratorSpec(spec)) {
    return Fail(absl::InvalidArgumentError("not a generator spec: " + spec));
  }
  auto source = LoadGraphSpec(spec);
  if (!source.ok()) return Fail(source.status());
  if (out.empty()) {
    WriteEdgeList(source->graph, std::cout);
    return std::cout ? 0 : kExitIo;
  }
  if (absl::Status s = WriteEdgeListFile(source->graph, out); !s.ok()) {
    return Fail(s);
  }
  return 0;
}

int DoFetch(const std::string& name, const std::string& url,
            const std::vector<int64_t>& expect) {
  std::optional<std::pair<int64_t, int64_t>> expected;
  if (!expect.empty()) {
    if (expect.size() != 2) {
      return Fail(absl::InvalidArgumentError("--expect takes n,m"));
    }
    expected = std::make_pair(expect[0], expect[1]);
  }
  auto result = FetchDataset(
      name, url.empty() ? std::nullopt : std::optional<std::string>(url),
      expected);
  if (!result.ok()) return Fail(result.status());
  if (result->mismatch) {
    std::cerr << "warning: " << name << ": " << *result->mismatch << "\n";
  }
  std::cout << result->path << "\t" << result->nodes << "\t" << result->edges
            << "\n";
  return 0;
}

struct AuditArgs {
  std::string algo = "seq";
  double eps = 1.0;
  double delta = 0.05;
  int64_t samples = 1'000'000;
  std::string graph;
  std::vector<NodeId> edge = {0, 2};
  double eps_prime_multiplier = 1.0;
  uint64_t seed = 0;
  int jobs = 1;
  std::string out;
};

// Path 0-1-2-3; the neighbour adds the chord (0, 2).
Graph DefaultAuditGraph() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}};
  return *Graph::FromEdges(4, edges);
}

int DoAudit(const AuditArgs& args) {
  auto algorithm = ParseAlgorithm(args.algo);
  if (!algorithm.ok()) return Fail(algorithm.status());
  Graph graph;
  if (args.graph.empty()) {
    graph = DefaultAuditGraph();
  } else {
    auto source = LoadGraphSpec(args.graph);
    if (!source.ok()) return Fail(source.status());
    graph = std::move(source->graph);
  }
  if (args.edge.size() != 2) {
    return Fail(absl::InvalidArgumentError("--edge takes u,v"));
  }
  AuditConfig config;
  config.algorithm = *algorithm;
  config.params = {args.eps, args.delta};
  config.edge = {args.edge[0], args.edge[1]};
  config.samples = args.samples;
  config.run_options.eps_prime_multiplier = args.eps_prime_multiplier;
  config.jobs = args.jobs;
  auto report = AuditPrivacy(graph, config, RngStream(args.seed));
  if (!report.ok()) return Fail(report.status());
  const std::string text = report->ToJson().dump(2) + "\n";
  if (args.out.empty()) {
    std::cout << text;
  } else if (absl::Status s = WriteText(args.out, text); !s.ok()) {
    return Fail(s);
  }
  std::cerr << (report->passed ? "PASS" : "FAIL") << " max adjusted margin "
            << report->max_adjusted_margin << "\n";
  return 0;
}

}  // namespace
}  // namespace dpdense

int main(int argc, char** argv) {
  using namespace dpdense;
  CLI::App app{"Differentially private densest subgraph"};
  app.require_subcommand(1);

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run an experiment grid");
  run_cmd->add_option("--algo", run.algo, "seq|par|phase|mr|baseline");
  run_cmd->add_option("--graph", run.graph, "Edge-list path or generator spec")
      ->required();
  run_cmd->add_flag("--remap", run.remap, "Compact node ids");
  run_cmd->add_option("--eps", run.eps, "Comma-separated epsilons")
      ->delimiter(',');
  run_cmd->add_option("--delta", run.delta, "Comma-separated deltas")
      ->delimiter(',');
  run_cmd->add_option("--trials", run.trials);
  run_cmd->add_option("--seed", run.seed);
  run_cmd->add_option("--max-iters", run.max_iters);
  run_cmd->add_option("--out", run.out, "CSV path");
  run_cmd->add_option("--jobs", run.jobs);
  run_cmd->add_option("--trace", run.trace, "JSONL trace path");
  run_cmd->add_option("--mr-trace", run.mr_trace, "Map-Reduce record dump");
  run_cmd->add_flag("--wall-time", run.wall_time, "Record wall_ms");

  std::string gen_spec, gen_out;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
  gen_cmd->add_option("spec", gen_spec, "er:N:P[:seed=S] or planted:N:K:P")
      ->required();
  gen_cmd->add_option("--out", gen_out, "Output path (default stdout)");

  std::string fetch_name, fetch_url;
  std::vector<int64_t> fetch_expect;
  CLI::App* fetch_cmd =
      app.add_subcommand("fetch", "Download a dataset into the cache");
  fetch_cmd->add_option("name", fetch_name)->required();
  fetch_cmd->add_option("--url", fetch_url, "http(s):// or file:// URL");
  fetch_cmd->add_option("--expect", fetch_expect, "n,m")->delimiter(',');

  AuditArgs audit;
  CLI::App* audit_cmd =
      app.add_subcommand("audit", "Empirical privacy check on a tiny graph");
  audit_cmd->add_option("--algo", audit.algo);
  audit_cmd->add_option("--eps", audit.eps);
  audit_cmd->add_option("--delta", audit.delta);
  audit_cmd->add_option("--samples", audit.samples);
  audit_cmd->add_option("--graph", audit.graph);
  audit_cmd->add_option("--edge", audit.edge, "u,v")->delimiter(',');
  audit_cmd->add_option("--eps-prime-multiplier", audit.eps_prime_multiplier);
  audit_cmd->add_option("--seed", audit.seed);
  audit_cmd->add_option("--jobs", audit.jobs);
  audit_cmd->add_option("--out", audit.out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (run_cmd->parsed()) return DoRun(run);
  if (gen_cmd->parsed()) return DoGen(gen_spec, gen_out);
  if (fetch_cmd->parsed()) return DoFetch(fetch_name, fetch_url, fetch_expect);
  return DoAudit(audit);
}
