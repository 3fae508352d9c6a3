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

#ifndef DPDENSE_EXPERIMENT_H_
#define DPDENSE_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpdense/algorithm.h"
#include "dpdense/graph.h"

namespace dpdense {

struct GraphSource {
  // File stem or the generator spec itself.
  std::string name;
  Graph graph;
};

// A generator spec, "er:N:P[:seed=S]" or "planted:N:K:P[:seed=S]", or else a
// path to an edge-list file.
absl::StatusOr<GraphSource> LoadGraphSpec(std::string_view spec,
                                          bool remap_ids = false);
bool IsGeneratorSpec(std::string_view spec);

struct ExperimentConfig {
  std::string dataset;
  Algorithm algorithm = Algorithm::kSeq;
  std::vector<double> epsilons = {1.0};
  std::vector<double> deltas = {1e-6};
  int trials = 1;
  uint64_t master_seed = 0;
  int64_t max_iters = 1'000'000;
  // Trials run concurrently on this many threads.
  int jobs = 1;
  // Record wall-clock time. Off by default so output is reproducible.
  bool wall_time = false;
  // Collect a per-trial JSON trace, and for the Map-Reduce algorithm the
  // sub-phase record dump.
  bool trace = false;
  bool mr_trace = false;

  absl::Status Validate() const;
};

struct TrialRow {
  std::string dataset;
  Algorithm algorithm = Algorithm::kSeq;
  std::optional<double> epsilon;
  std::optional<double> delta;
  int trial = 0;
  uint64_t seed = 0;
  int64_t n = 0;
  int64_t m = 0;
  double density = 0.0;
  double baseline_density = 0.0;
  std::optional<double> relative_density;
  double jaccard = 0.0;
  std::optional<double> recall;
  int64_t iterations = 0;
  int64_t phases = 0;
  bool truncated = false;
  double wall_ms = 0.0;
  // Original ids of the selected nodes, ascending by dense id.
  std::vector<uint64_t> selected;
  // One JSON object when tracing is on.
  std::string trace_json;
  // JSON lines, one per Map-Reduce sub-phase.
  std::string mr_trace_jsonl;
};

// Seed of trial `trial` at (epsilon, delta) under `master`.
uint64_t TrialSeed(uint64_t master, double epsilon, double delta, int trial);

// Runs the grid. The baseline is computed once; for the baseline algorithm a
// single row is produced. Row order is (epsilon, delta, trial) regardless of
// config.jobs.
absl::StatusOr<std::vector<TrialRow>> RunExperiment(
    const ExperimentConfig& config, const Graph& graph);

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double value);

std::string CsvHeader();
std::string CsvRow(const TrialRow& row);

// Name of the sidecar file holding the row's selected set.
std::string SidecarName(const TrialRow& row);

// Writes the CSV to `csv_path` and sidecars into `csv_path` + ".sets/".
absl::Status WriteExperiment(const std::vector<TrialRow>& rows,
                             const std::string& csv_path);

}  // namespace dpdense

#endif  // DPDENSE_EXPERIMENT_H_
