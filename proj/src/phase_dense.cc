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

#include "dpdense/phase_dense.h"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "dpdense/parallel.h"
#include "dpdense/status_macros.h"

namespace dpdense {

PhaseConstants PhaseConstants::From(const PrivacyParams& params,
                                    double multiplier) {
  const double eps_prime = multiplier * (1.0 - std::exp(-1.0)) /
                           (24.0 * std::log(4.0 / params.delta)) *
                           params.epsilon;
  return {eps_prime, 1.0 / eps_prime + 1.0};
}

double PhaseConstants::LogRemovalProbability(int64_t degree) const {
  return -eps_prime * (static_cast<double>(degree) + c);
}

bool IsShortcutPhase(NodeId num_nodes, int64_t size) {
  if (num_nodes <= 1) return true;
  return static_cast<double>(size) <= std::log(static_cast<double>(num_nodes));
}

absl::StatusOr<PhaseBudget> DrawPhaseBudget(const PhaseConstants& constants,
                                            const PrivacyParams& params,
                                            NodeId num_nodes, int64_t size,
                                            double density, int64_t phase,
                                            const RngStream& root) {
  const double log_n = std::log(static_cast<double>(num_nodes));
  RngStream noise_rng = root.Substream("phase.noise", phase);
  DPDENSE_ASSIGN_OR_RETURN(
      const double noise,
      SampleLaplace(4.0 * log_n / (static_cast<double>(size) * params.epsilon),
                    noise_rng));
  PhaseBudget budget;
  budget.noisy_density = density + 16.0 / params.epsilon * log_n + noise;
  budget.log_budget =
      constants.eps_prime * (4.0 * budget.noisy_density + constants.c) +
      std::log(4.0 * log_n);
  return budget;
}

absl::StatusOr<bool> RemovedInPhase(const PhaseConstants& constants,
                                    int64_t degree, double log_budget,
                                    int64_t phase, NodeId v,
                                    const RngStream& root) {
  RngStream race = root.Substream("phase.race", phase, v);
  DPDENSE_ASSIGN_OR_RETURN(
      const double log_time,
      SampleGeometricLog(constants.LogRemovalProbability(degree), race));
  return log_time <= log_budget;
}

absl::StatusOr<DPResult> RunPhase(const Graph& graph,
                                  const PrivacyParams& params, RngStream& rng,
                                  const RunOptions& options) {
  DPDENSE_RETURN_IF_ERROR(params.Validate());
  const auto start = std::chrono::steady_clock::now();
  const PhaseConstants constants =
      PhaseConstants::From(params, options.eps_prime_multiplier);
  const NodeId n = graph.num_nodes();

  DPResult result;
  result.seed = rng.seed();
  result.trace.num_nodes = n;

  PeelState state(graph);
  std::vector<NodeId> alive = state.nodes().Members();
  std::vector<uint8_t> removed;
  std::vector<absl::Status> errors;
  result.trace.RecordDistinct(state.size(), state.num_edges());

  int64_t phase = 0;
  while (!alive.empty()) {
    PhaseRecord record;
    record.index = phase;
    record.size = state.size();
    record.num_edges = state.num_edges();
    record.density = state.density();

    removed.assign(alive.size(), 0);
    if (IsShortcutPhase(n, state.size())) {
      record.shortcut = true;
      removed.assign(alive.size(), 1);
    } else {
      DPDENSE_ASSIGN_OR_RETURN(
          const PhaseBudget budget,
          DrawPhaseBudget(constants, params, n, state.size(), state.density(),
                          phase, rng));
      record.noisy_density = budget.noisy_density;
      record.log_budget = budget.log_budget;
      errors.assign(alive.size(), absl::OkStatus());
      ParallelFor(alive.size(), options.jobs, [&](size_t i) {
        const NodeId v = alive[i];
        auto out = RemovedInPhase(constants, state.degree(v), budget.log_budget,
                                  phase, v, rng);
        if (out.ok()) {
          removed[i] = *out;
        } else {
          errors[i] = out.status();
        }
      });
      for (const absl::Status& s : errors) DPDENSE_RETURN_IF_ERROR(s);
    }

    std::vector<NodeId> kept;
    kept.reserve(alive.size());
    for (size_t i = 0; i < alive.size(); ++i) {
      if (removed[i]) {
        result.trace.removal_order.push_back(alive[i]);
        ++record.removed;
      } else {
        kept.push_back(alive[i]);
      }
    }
    // Degrees change only once the whole phase has been decided.
    for (size_t i = 0; i < alive.size(); ++i) {
      if (removed[i]) DPDENSE_RETURN_IF_ERROR(state.RemoveNode(alive[i]));
    }
    alive.swap(kept);
    result.phase_records.push_back(record);
    result.trace.RecordDistinct(state.size(), state.num_edges());
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
