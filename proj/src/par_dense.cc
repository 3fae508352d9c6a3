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

#include "dpdense/par_dense.h"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dpdense/parallel.h"
#include "dpdense/status_macros.h"

namespace dpdense {

ParConstants ParConstants::From(const PrivacyParams& params,
                                double multiplier) {
  const double eps_prime = multiplier * (1.0 - std::exp(-1.0)) /
                           (8.0 * std::log(std::exp(1.0) / params.delta)) *
                           params.epsilon;
  return {eps_prime, 1.0 / eps_prime + 1.0};
}

double ParConstants::RemovalProbability(int64_t degree) const {
  return std::exp(-eps_prime * (static_cast<double>(degree) + c));
}

absl::StatusOr<DPResult> RunPar(const Graph& graph, const PrivacyParams& params,
                                RngStream& rng, const RunOptions& options) {
  DPDENSE_RETURN_IF_ERROR(params.Validate());
  if (options.max_iters < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("max_iters must be >= 1, got ", options.max_iters));
  }
  const auto start = std::chrono::steady_clock::now();
  const ParConstants constants =
      ParConstants::From(params, options.eps_prime_multiplier);
  const NodeId n = graph.num_nodes();

  DPResult result;
  result.seed = rng.seed();
  result.trace.num_nodes = n;

  PeelState state(graph);
  std::vector<NodeId> alive = state.nodes().Members();
  std::vector<uint8_t> removed(alive.size());
  result.trace.RecordDistinct(state.size(), state.num_edges());

  int64_t round = 0;
  while (!alive.empty()) {
    if (round >= options.max_iters) {
      result.truncated = true;
      break;
    }
    ++round;
    // All decisions in a round read start-of-round degrees; each node draws
    // from its own (round, node) stream.
    removed.assign(alive.size(), 0);
    ParallelFor(alive.size(), options.jobs, [&](size_t i) {
      const NodeId v = alive[i];
      RngStream draw = rng.Substream("par.remove", round, v);
      removed[i] =
          draw.NextUniform() < constants.RemovalProbability(state.degree(v));
    });
    std::vector<NodeId> kept;
    kept.reserve(alive.size());
    for (size_t i = 0; i < alive.size(); ++i) {
      if (removed[i]) {
        result.trace.removal_order.push_back(alive[i]);
      } else {
        kept.push_back(alive[i]);
      }
    }
    for (size_t i = 0; i < alive.size(); ++i) {
      if (removed[i]) DPDENSE_RETURN_IF_ERROR(state.RemoveNode(alive[i]));
    }
    alive.swap(kept);
    result.trace.RecordDistinct(state.size(), state.num_edges());
  }
  result.iterations = round;

  RngStream select_rng = rng.Substream("par.select");
  DPDENSE_RETURN_IF_ERROR(SelectFinal(params.epsilon, select_rng, result));
  result.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace dpdense
