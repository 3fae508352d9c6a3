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

#ifndef DPDENSE_BASELINE_H_
#define DPDENSE_BASELINE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "dpdense/graph.h"

namespace dpdense {

struct PeelStep {
  NodeId removed;
  int64_t size_before;
  double density_before;
};

// The nested sequence S_0 = V, S_1, ..., S_{n-1} produced by peeling.
struct PeelTrace {
  std::vector<PeelStep> steps;
  // Index t of the densest S_t (earliest on ties).
  size_t best_index = 0;
};

struct DensestResult {
  NodeSet nodes;
  double density = 0.0;
};

struct CharikarResult {
  NodeSet nodes;
  double density = 0.0;
  PeelTrace trace;
};

// Greedy 1/2-approximation: repeatedly remove a minimum-degree node (smallest
// id on ties) and return the densest prefix set. Bucket queue over degrees.
CharikarResult CharikarPeel(const Graph& graph);

inline constexpr NodeId kBruteForceMaxNodes = 24;

// Exact densest subgraph by enumerating all non-empty subsets. Ties go to the
// smaller set, then to the lexicographically smaller member list.
absl::StatusOr<DensestResult> BruteForceDensest(const Graph& graph);

}  // namespace dpdense

#endif  // DPDENSE_BASELINE_H_
