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

#include "dpdense/audit.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dpdense/parallel.h"
#include "dpdense/status_macros.h"

namespace dpdense {
namespace {

constexpr size_t kChunk = 4096;

uint32_t ToMask(const NodeSet& set) {
  uint32_t mask = 0;
  for (NodeId v : set.Members()) mask |= 1u << v;
  return mask;
}

// Histogram of outcomes over `samples` runs; sample i uses its own
// substream so the histogram is independent of the thread count.
absl::StatusOr<std::vector<int64_t>> Histogram(const Graph& graph,
                                               const AuditConfig& config,
                                               const RngStream& root) {
  const size_t outcomes = size_t{1} << graph.num_nodes();
  const auto samples = static_cast<size_t>(config.samples);
  const size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::vector<int64_t>> partial(chunks);
  std::vector<absl::Status> errors(chunks, absl::OkStatus());
  ParallelFor(chunks, config.jobs, [&](size_t c) {
    std::vector<int64_t> counts(outcomes, 0);
    const size_t end = std::min(samples, (c + 1) * kChunk);
    for (size_t i = c * kChunk; i < end; ++i) {
      RngStream rng = root.Substream("audit.sample", i);
      auto result = RunAlgorithm(config.algorithm, graph, config.params, rng,
                                 config.run_options);
      if (!result.ok()) {
        errors[c] = result.status();
        return;
      }
      ++counts[ToMask(result->selected)];
    }
    partial[c] = std::move(counts);
  });
  for (const absl::Status& s : errors) DPDENSE_RETURN_IF_ERROR(s);
  std::vector<int64_t> total(outcomes, 0);
  for (const auto& counts : partial) {
    for (size_t k = 0; k < outcomes; ++k) total[k] += counts[k];
  }
  return total;
}

}  // namespace

absl::StatusOr<AuditReport> AuditPrivacy(const Graph& graph,
                                         const AuditConfig& config,
                                         const RngStream& rng) {
  if (graph.num_nodes() > kAuditMaxNodes) {
    return absl::InvalidArgumentError(absl::StrCat(
        "audit enumerates 2^n outcomes; n must be <= ", kAuditMaxNodes,
        ", got ", graph.num_nodes()));
  }
  if (config.samples < kAuditMinSamples) {
    return absl::InvalidArgumentError(
        absl::StrCat("audit needs at least ", kAuditMinSamples,
                     " samples, got ", config.samples));
  }
  DPDENSE_RETURN_IF_ERROR(config.params.Validate());
  DPDENSE_ASSIGN_OR_RETURN(
      const Graph neighbour,
      graph.WithEdgeToggled(config.edge.first, config.edge.second));

  DPDENSE_ASSIGN_OR_RETURN(const std::vector<int64_t> counts_g,
                           Histogram(graph, config, rng.Substream("audit.g")));
  DPDENSE_ASSIGN_OR_RETURN(
      const std::vector<int64_t> counts_neighbour,
      Histogram(neighbour, config, rng.Substream("audit.neighbour")));

  AuditReport report;
  report.config = config;
  const double samples = static_cast<double>(config.samples);
  const double growth = std::exp(config.params.epsilon);
  const double delta = config.params.delta;
  report.max_adjusted_margin = -std::numeric_limits<double>::infinity();
  for (uint32_t mask = 0; mask < counts_g.size(); ++mask) {
    AuditRow row;
    for (NodeId v = 0; v < graph.num_nodes(); ++v) {
      if (mask & (1u << v)) row.outcome.push_back(v);
    }
    row.count_g = counts_g[mask];
    row.count_neighbour = counts_neighbour[mask];
    row.p_g = static_cast<double>(row.count_g) / samples;
    row.p_neighbour = static_cast<double>(row.count_neighbour) / samples;
    const double var_g = row.p_g * (1.0 - row.p_g) / samples;
    const double var_n = row.p_neighbour * (1.0 - row.p_neighbour) / samples;
    row.margin_forward = row.p_g - growth * row.p_neighbour - delta;
    row.margin_backward = row.p_neighbour - growth * row.p_g - delta;
    row.adjusted_forward =
        row.margin_forward - 3.0 * std::sqrt(var_g + growth * growth * var_n);
    row.adjusted_backward =
        row.margin_backward - 3.0 * std::sqrt(var_n + growth * growth * var_g);
    report.max_adjusted_margin =
        std::max({report.max_adjusted_margin, row.adjusted_forward,
                  row.adjusted_backward});
    report.rows.push_back(std::move(row));
  }
  report.passed = report.max_adjusted_margin <= 0.0;
  return report;
}

nlohmann::json AuditReport::ToJson() const {
  nlohmann::json out;
  out["algorithm"] = AlgorithmName(config.algorithm);
  out["epsilon"] = config.params.epsilon;
  out["delta"] = config.params.delta;
  out["samples"] = config.samples;
  out["edge"] = {config.edge.first, config.edge.second};
  out["eps_prime_multiplier"] = config.run_options.eps_prime_multiplier;
  nlohmann::json rows = nlohmann::json::array();
  for (const AuditRow& row : this->rows) {
    rows.push_back({{"outcome", row.outcome},
                    {"count_g", row.count_g},
                    {"count_neighbour", row.count_neighbour},
                    {"p_g", row.p_g},
                    {"p_neighbour", row.p_neighbour},
                    {"margin_forward", row.margin_forward},
                    {"margin_backward", row.margin_backward},
                    {"adjusted_forward", row.adjusted_forward},
                    {"adjusted_backward", row.adjusted_backward}});
  }
  out["events"] = std::move(rows);
  out["max_adjusted_margin"] = max_adjusted_margin;
  out["passed"] = passed;
  return out;
}

}  // namespace dpdense
