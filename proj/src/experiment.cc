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

#include "dpdense/experiment.h"

#include <bit>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "dpdense/baseline.h"
#include "dpdense/metrics.h"
#include "dpdense/mr_dense.h"
#include "dpdense/parallel.h"
#include "dpdense/status_macros.h"
#include "json.hpp"

namespace dpdense {
namespace {

absl::Status SpecError(const std::string& spec, const std::string& why) {
  return absl::InvalidArgumentError(
      absl::StrCat("bad generator spec '", spec, "': ", why));
}

nlohmann::json TraceJson(const TrialRow& row, const DPResult& result) {
  nlohmann::json out;
  out["algorithm"] = AlgorithmName(row.algorithm);
  out["trial"] = row.trial;
  out["seed"] = row.seed;
  if (row.epsilon) out["epsilon"] = *row.epsilon;
  if (row.delta) out["delta"] = *row.delta;
  nlohmann::json candidates = nlohmann::json::array();
  for (const Candidate& c : result.trace.candidates) {
    candidates.push_back(
        {{"size", c.size}, {"edges", c.num_edges}, {"density", c.density}});
  }
  out["candidates"] = std::move(candidates);
  out["selected_index"] = result.selected_index;
  if (!result.phase_records.empty()) {
    nlohmann::json phases = nlohmann::json::array();
    for (const PhaseRecord& p : result.phase_records) {
      nlohmann::json rec = {{"phase", p.index},     {"size", p.size},
                            {"edges", p.num_edges}, {"density", p.density},
                            {"removed", p.removed}, {"shortcut", p.shortcut}};
      rec["noisy_density"] =
          p.noisy_density ? nlohmann::json(*p.noisy_density) : nullptr;
      rec["log_budget"] =
          p.log_budget ? nlohmann::json(*p.log_budget) : nullptr;
      phases.push_back(std::move(rec));
    }
    out["phases"] = std::move(phases);
  }
  return out;
}

std::string Optional(const std::optional<double>& value) {
  return value ? FormatDouble(*value) : std::string();
}

}  // namespace

bool IsGeneratorSpec(std::string_view spec) {
  return spec.starts_with("er:") || spec.starts_with("planted:");
}

absl::StatusOr<GraphSource> LoadGraphSpec(std::string_view spec_view,
                                          bool remap_ids) {
  const std::string spec(spec_view);
  if (!IsGeneratorSpec(spec)) {
    ParseOptions options;
    options.remap_ids = remap_ids;
    DPDENSE_ASSIGN_OR_RETURN(Graph graph, LoadEdgeListFile(spec, options));
    return GraphSource{std::filesystem::path(spec).stem().string(),
                       std::move(graph)};
  }
  std::vector<std::string> parts = absl::StrSplit(spec, ':');
  uint64_t seed = 0;
  if (parts.back().starts_with("seed=")) {
    if (!absl::SimpleAtoi(parts.back().substr(5), &seed)) {
      return SpecError(spec, "seed is not an integer");
    }
    parts.pop_back();
  }
  const bool planted = parts[0] == "planted";
  const size_t expected = planted ? 4 : 3;
  if (parts.size() != expected) {
    return SpecError(spec, planted ? "expected planted:N:K:P[:seed=S]"
                                   : "expected er:N:P[:seed=S]");
  }
  uint32_t n = 0;
  uint32_t k = 0;
  double p = 0.0;
  if (!absl::SimpleAtoi(parts[1], &n)) return SpecError(spec, "bad N");
  if (planted && !absl::SimpleAtoi(parts[2], &k)) {
    return SpecError(spec, "bad K");
  }
  if (!absl::SimpleAtod(parts.back(), &p)) return SpecError(spec, "bad P");
  absl::StatusOr<Graph> graph =
      planted ? GeneratePlanted(n, k, p, seed) : GenerateErdosRenyi(n, p, seed);
  if (!graph.ok()) return graph.status();
  return GraphSource{spec, *std::move(graph)};
}

absl::Status ExperimentConfig::Validate() const {
  if (trials < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("trials must be >= 1, got ", trials));
  }
  if (max_iters < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("max-iters must be >= 1, got ", max_iters));
  }
  if (IsPrivate(algorithm)) {
    if (epsilons.empty() || deltas.empty()) {
      return absl::InvalidArgumentError("need at least one epsilon and delta");
    }
    for (double eps : epsilons) {
      for (double delta : deltas) {
        DPDENSE_RETURN_IF_ERROR((PrivacyParams{eps, delta}.Validate()));
      }
    }
  }
  return absl::OkStatus();
}

uint64_t TrialSeed(uint64_t master, double epsilon, double delta, int trial) {
  return CombineSeed(master, "trial", std::bit_cast<uint64_t>(epsilon),
                     std::bit_cast<uint64_t>(delta),
                     static_cast<uint64_t>(trial));
}

absl::StatusOr<std::vector<TrialRow>> RunExperiment(
    const ExperimentConfig& config, const Graph& graph) {
  DPDENSE_RETURN_IF_ERROR(config.Validate());
  const CharikarResult baseline = CharikarPeel(graph);

  struct Job {
    std::optional<double> epsilon;
    std::optional<double> delta;
    int trial;
  };
  std::vector<Job> jobs;
  if (IsPrivate(config.algorithm)) {
    for (double eps : config.epsilons) {
      for (double delta : config.deltas) {
        for (int t = 0; t < config.trials; ++t) {
          jobs.push_back({eps, delta, t});
        }
      }
    }
  } else {
    jobs.push_back({std::nullopt, std::nullopt, 0});
  }

  std::vector<TrialRow> rows(jobs.size());
  std::vector<absl::Status> errors(jobs.size(), absl::OkStatus());
  ParallelFor(jobs.size(), config.jobs, [&](size_t i) {
    const Job& job = jobs[i];
    TrialRow& row = rows[i];
    row.dataset = config.dataset;
    row.algorithm = config.algorithm;
    row.epsilon = job.epsilon;
    row.delta = job.delta;
    row.trial = job.trial;
    row.seed = job.epsilon ? TrialSeed(config.master_seed, *job.epsilon,
                                       *job.delta, job.trial)
                           : config.master_seed;
    row.n = graph.num_nodes();
    row.m = graph.num_edges();

    const PrivacyParams params{job.epsilon.value_or(1.0),
                               job.delta.value_or(0.5)};
    RunOptions options;
    options.max_iters = config.max_iters;
    RngStream rng(row.seed);
    absl::StatusOr<DPResult> result;
    if (config.algorithm == Algorithm::kMr && config.mr_trace) {
      std::ostringstream dump;
      result = RunMrDense(graph, params, rng, options, &dump);
      row.mr_trace_jsonl = dump.str();
    } else {
      result = RunAlgorithm(config.algorithm, graph, params, rng, options);
    }
    if (!result.ok()) {
      errors[i] = result.status();
      return;
    }

    row.density = result->density;
    row.baseline_density = baseline.density;
    auto relative = RelativeDensity(result->density, baseline.density);
    if (relative.ok()) row.relative_density = *relative;
    row.jaccard = Jaccard(result->selected, baseline.nodes);
    auto recall = Recall(result->selected, baseline.nodes);
    if (recall.ok()) row.recall = *recall;
    row.iterations = result->iterations;
    row.phases = result->phases;
    row.truncated = result->truncated;
    row.wall_ms = config.wall_time ? result->elapsed_ms : 0.0;
    for (NodeId v : result->selected.Members()) {
      row.selected.push_back(graph.original_id(v));
    }
    if (config.trace) row.trace_json = TraceJson(row, *result).dump();
  });
  for (const absl::Status& s : errors) DPDENSE_RETURN_IF_ERROR(s);
  return rows;
}

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

std::string CsvHeader() {
  return "dataset,algorithm,epsilon,delta,trial,seed,n,m,density,"
         "baseline_density,relative_density,jaccard,recall,iterations,phases,"
         "truncated,wall_ms";
}

std::string CsvRow(const TrialRow& row) {
  return absl::StrJoin(
      {row.dataset, std::string(AlgorithmName(row.algorithm)),
       Optional(row.epsilon), Optional(row.delta), absl::StrCat(row.trial),
       absl::StrCat(row.seed), absl::StrCat(row.n), absl::StrCat(row.m),
       FormatDouble(row.density), FormatDouble(row.baseline_density),
       Optional(row.relative_density), FormatDouble(row.jaccard),
       Optional(row.recall), absl::StrCat(row.iterations),
       absl::StrCat(row.phases), std::string(row.truncated ? "1" : "0"),
       FormatDouble(row.wall_ms)},
      ",");
}

std::string SidecarName(const TrialRow& row) {
  if (!row.epsilon)
    return absl::StrCat(std::string(AlgorithmName(row.algorithm)), ".txt");
  return absl::StrCat(std::string(AlgorithmName(row.algorithm)), "_eps",
                      FormatDouble(*row.epsilon), "_delta",
                      FormatDouble(*row.delta), "_t", row.trial, ".txt");
}

absl::Status WriteExperiment(const std::vector<TrialRow>& rows,
                             const std::string& csv_path) {
  std::ofstream csv(csv_path);
  if (!csv)
    return absl::UnavailableError(absl::StrCat("cannot write ", csv_path));
  csv << CsvHeader() << '\n';
  for (const TrialRow& row : rows) csv << CsvRow(row) << '\n';
  if (!csv.flush()) {
    return absl::DataLossError(absl::StrCat("write failed: ", csv_path));
  }

  const std::filesystem::path dir = csv_path + ".sets";
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create ", dir.string(), ": ", ec.message()));
  }
  for (const TrialRow& row : rows) {
    const std::filesystem::path path = dir / SidecarName(row);
    std::ofstream out(path);
    for (uint64_t id : row.selected) out << id << '\n';
    if (!out.flush()) {
      return absl::DataLossError(absl::StrCat("write failed: ", path.string()));
    }
  }
  return absl::OkStatus();
}

}  // namespace dpdense
