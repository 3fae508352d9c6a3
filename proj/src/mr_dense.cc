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

#include "dpdense/mr_dense.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iterator>
#include <ostream>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "dpdense/mr_engine.h"
#include "dpdense/phase_dense.h"
#include "dpdense/status_macros.h"
#include "json.hpp"

namespace dpdense {
namespace {

using Records = std::vector<KVRecord>;

nlohmann::json KeyToJson(const MrKey& key) {
  switch (key.kind) {
    case MrKey::Kind::kSet:
      return "SET";
    case MrKey::Kind::kDensity:
      return "DENSITY";
    case MrKey::Kind::kNode:
      break;
  }
  return key.node;
}

void DumpSubphase(std::ostream* out, int64_t phase, std::string_view name,
                  const Records& records) {
  if (out == nullptr) return;
  nlohmann::json line;
  line["phase"] = phase;
  line["subphase"] = name;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, value] : records) {
    nlohmann::json v;
    if (const auto* scalar = std::get_if<int64_t>(&value)) {
      v = *scalar == kPresent ? nlohmann::json("PRESENT")
                              : nlohmann::json(*scalar);
    } else {
      v = std::get<std::vector<NodeId>>(value);
    }
    rows.push_back({KeyToJson(key), v});
  }
  line["records"] = std::move(rows);
  *out << line.dump() << '\n';
}

// Reduce 1, keyed by node u over everything addressed to u. A self-edge
// means u left in the previous phase; otherwise rebuild u's live
// neighbourhood and emit its set membership and degree.
Records ReduceNeighbourhood(const MrKey& key, std::span<const MrValue> values) {
  const NodeId u = key.node;
  std::vector<NodeId> neighbours;
  for (const MrValue& value : values) {
    const int64_t id = std::get<int64_t>(value);
    if (id == static_cast<int64_t>(u)) return {};
    if (id != kPresent) neighbours.push_back(static_cast<NodeId>(id));
  }
  const auto degree = static_cast<int64_t>(neighbours.size());
  Records out;
  out.emplace_back(MrKey::Node(u), std::move(neighbours));
  out.emplace_back(MrKey::Set(), static_cast<int64_t>(u));
  out.emplace_back(MrKey::DensityKey(), degree);
  return out;
}

// Reduce 2: <SET; u1, u2, ...> -> S_i.
Records ReduceSet(const MrKey& key, std::span<const MrValue> values) {
  std::vector<NodeId> members;
  members.reserve(values.size());
  for (const MrValue& value : values) {
    members.push_back(static_cast<NodeId>(std::get<int64_t>(value)));
  }
  Records out;
  out.emplace_back(key, std::move(members));
  return out;
}

// Reduce 3: <DENSITY; deg(u1), deg(u2), ...> -> sum of degrees = 2 |E[S_i]|.
Records ReduceDegreeSum(const MrKey& key, std::span<const MrValue> values) {
  int64_t sum = 0;
  for (const MrValue& value : values) sum += std::get<int64_t>(value);
  Records out;
  out.emplace_back(key, sum);
  return out;
}

}  // namespace

std::vector<KVRecord> InitialRecords(const Graph& graph) {
  Records records;
  records.reserve(2 * static_cast<size_t>(graph.num_edges()) +
                  graph.num_nodes());
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    records.emplace_back(MrKey::Node(u), kPresent);
    for (NodeId v : graph.neighbors(u)) {
      records.emplace_back(MrKey::Node(u), static_cast<int64_t>(v));
    }
  }
  return records;
}

absl::StatusOr<DPResult> RunMrDense(const Graph& graph,
                                    const PrivacyParams& params, RngStream& rng,
                                    const RunOptions& options,
                                    std::ostream* trace) {
  DPDENSE_RETURN_IF_ERROR(params.Validate());
  const auto start = std::chrono::steady_clock::now();
  const PhaseConstants constants =
      PhaseConstants::From(params, options.eps_prime_multiplier);
  const NodeId n = graph.num_nodes();
  const int jobs = options.jobs;

  DPResult result;
  result.seed = rng.seed();
  result.trace.num_nodes = n;

  Records records = InitialRecords(graph);
  std::vector<NodeId> previous;  // S_{i-1}
  bool first = true;
  int64_t phase = 0;
  while (true) {
    Records neighbourhoods =
        mr::ReduceByKey(std::move(records), ReduceNeighbourhood, jobs);
    DumpSubphase(trace, phase, "reduce_neighbourhood", neighbourhoods);

    Records adjacency;
    Records set_records;
    Records degree_records;
    for (auto& record : neighbourhoods) {
      switch (record.first.kind) {
        case MrKey::Kind::kNode:
          adjacency.push_back(std::move(record));
          break;
        case MrKey::Kind::kSet:
          set_records.push_back(std::move(record));
          break;
        case MrKey::Kind::kDensity:
          degree_records.push_back(std::move(record));
          break;
      }
    }

    Records set_out = mr::ReduceByKey(std::move(set_records), ReduceSet, jobs);
    DumpSubphase(trace, phase, "reduce_set", set_out);
    std::vector<NodeId> members;
    if (!set_out.empty()) {
      members = std::get<std::vector<NodeId>>(set_out.front().second);
    }
    const auto size = static_cast<int64_t>(members.size());

    Records degree_out =
        mr::ReduceByKey(std::move(degree_records), ReduceDegreeSum, jobs);
    DumpSubphase(trace, phase, "reduce_degree_sum", degree_out);
    const int64_t degree_sum =
        degree_out.empty() ? 0 : std::get<int64_t>(degree_out.front().second);
    const int64_t num_edges = degree_sum / 2;

    // Nodes of S_{i-1} missing from S_i left during the previous phase.
    if (!first) {
      std::vector<NodeId> gone;
      std::set_difference(previous.begin(), previous.end(), members.begin(),
                          members.end(), std::back_inserter(gone));
      result.trace.removal_order.insert(result.trace.removal_order.end(),
                                        gone.begin(), gone.end());
      result.phase_records.back().removed = static_cast<int64_t>(gone.size());
    }
    result.trace.RecordDistinct(size, num_edges);
    first = false;
    if (size == 0) break;

    PhaseRecord record;
    record.index = phase;
    record.size = size;
    record.num_edges = num_edges;
    record.density = Density(num_edges, size);

    PhaseBudget budget;
    if (IsShortcutPhase(n, size)) {
      record.shortcut = true;
    } else {
      DPDENSE_ASSIGN_OR_RETURN(
          budget, DrawPhaseBudget(constants, params, n, size, record.density,
                                  phase, rng));
      record.noisy_density = budget.noisy_density;
      record.log_budget = budget.log_budget;
    }
    result.phase_records.push_back(record);

    std::vector<absl::Status> errors(adjacency.size(), absl::OkStatus());
    std::vector<size_t> index_of(n, 0);
    for (size_t i = 0; i < adjacency.size(); ++i) {
      index_of[adjacency[i].first.node] = i;
    }
    const bool shortcut = record.shortcut;
    records = mr::Map(
        adjacency,
        [&](const KVRecord& adj) -> Records {
          const NodeId u = adj.first.node;
          const auto& neighbours = std::get<std::vector<NodeId>>(adj.second);
          bool leaves = shortcut;
          if (!shortcut) {
            auto out = RemovedInPhase(constants,
                                      static_cast<int64_t>(neighbours.size()),
                                      budget.log_budget, phase, u, rng);
            if (!out.ok()) {
              errors[index_of[u]] = out.status();
              return {};
            }
            leaves = *out;
          }
          Records emitted;
          if (leaves) {
            emitted.emplace_back(MrKey::Node(u), static_cast<int64_t>(u));
            return emitted;
          }
          emitted.emplace_back(MrKey::Node(u), kPresent);
          for (NodeId v : neighbours) {
            emitted.emplace_back(MrKey::Node(v), static_cast<int64_t>(u));
          }
          return emitted;
        },
        jobs);
    for (const absl::Status& s : errors) DPDENSE_RETURN_IF_ERROR(s);
    DumpSubphase(trace, phase, "map_race", records);

    previous = std::move(members);
    ++phase;
  }
  result.phases = phase;
  result.iterations = phase;

  RngStream select_rng = rng.Substream(kPhaseSelectLabel);
  DPDENSE_RETURN_IF_ERROR(SelectFinal(params.epsilon, select_rng, result));
  result.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace dpdense
