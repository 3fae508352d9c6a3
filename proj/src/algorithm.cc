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

#include "dpdense/algorithm.h"

#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dpdense/baseline.h"
#include "dpdense/mr_dense.h"
#include "dpdense/par_dense.h"
#include "dpdense/phase_dense.h"
#include "dpdense/seq_dense.h"

namespace dpdense {

absl::StatusOr<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "seq") return Algorithm::kSeq;
  if (name == "par") return Algorithm::kPar;
  if (name == "phase") return Algorithm::kPhase;
  if (name == "mr") return Algorithm::kMr;
  if (name == "baseline") return Algorithm::kBaseline;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown algorithm '", std::string(name),
                   "' (expected seq, par, phase, mr or baseline)"));
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSeq:
      return "seq";
    case Algorithm::kPar:
      return "par";
    case Algorithm::kPhase:
      return "phase";
    case Algorithm::kMr:
      return "mr";
    case Algorithm::kBaseline:
      return "baseline";
  }
  return "unknown";
}

bool IsPrivate(Algorithm algorithm) {
  return algorithm != Algorithm::kBaseline;
}

absl::StatusOr<DPResult> RunAlgorithm(Algorithm algorithm, const Graph& graph,
                                      const PrivacyParams& params,
                                      RngStream& rng,
                                      const RunOptions& options) {
  switch (algorithm) {
    case Algorithm::kSeq:
      return RunSeq(graph, params, rng, options);
    case Algorithm::kPar:
      return RunPar(graph, params, rng, options);
    case Algorithm::kPhase:
      return RunPhase(graph, params, rng, options);
    case Algorithm::kMr:
      return RunMrDense(graph, params, rng, options);
    case Algorithm::kBaseline:
      break;
  }
  CharikarResult peel = CharikarPeel(graph);
  DPResult result;
  result.seed = rng.seed();
  result.trace.num_nodes = graph.num_nodes();
  for (const PeelStep& step : peel.trace.steps) {
    result.trace.removal_order.push_back(step.removed);
  }
  if (!peel.nodes.empty()) {
    result.trace.candidates.push_back({peel.trace.best_index, peel.nodes.size(),
                                       InducedEdgeCount(graph, peel.nodes),
                                       peel.density});
  }
  result.selected = std::move(peel.nodes);
  result.density = peel.density;
  result.iterations = graph.num_nodes();
  return result;
}

}  // namespace dpdense
