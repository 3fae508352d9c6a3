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

#ifndef DPDENSE_RESULT_H_
#define DPDENSE_RESULT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpdense/graph.h"
#include "dpdense/random.h"

namespace dpdense {

struct Candidate {
  // The candidate is V minus removal_order[0, removed).
  size_t removed = 0;
  int64_t size = 0;
  int64_t num_edges = 0;
  double density = 0.0;
};

// Nested candidate sets S_0 = V, S_1, ... stored as one removal order plus
// prefix lengths, so a trace over n nodes costs O(n) memory.
struct CandidateTrace {
  NodeId num_nodes = 0;
  std::vector<NodeId> removal_order;
  std::vector<Candidate> candidates;

  NodeSet Materialize(size_t index) const;

  // Appends the set left after `removal_order` so far, unless it is empty
  // or the same set as the last candidate. Sets are nested, so equal size
  // means equal set.
  void RecordDistinct(int64_t size, int64_t num_edges);
};

// Per-phase bookkeeping for the phase-based algorithm and its Map-Reduce
// replay. The noise fields are unset for the small-set shortcut phase.
struct PhaseRecord {
  int64_t index = 0;
  int64_t size = 0;
  int64_t num_edges = 0;
  double density = 0.0;
  std::optional<double> noisy_density;
  std::optional<double> log_budget;
  int64_t removed = 0;
  bool shortcut = false;
};

struct DPResult {
  NodeSet selected;
  double density = 0.0;
  size_t selected_index = 0;
  CandidateTrace trace;
  // Peeling rounds: n for the sequential algorithm, while-loop iterations for
  // the parallel one, phases for the phase-based ones.
  int64_t iterations = 0;
  int64_t phases = 0;
  // Set when the iteration cap stopped the parallel algorithm early. The
  // output is then not the output of the private mechanism.
  bool truncated = false;
  uint64_t seed = 0;
  double elapsed_ms = 0.0;
  std::vector<PhaseRecord> phase_records;
};

struct RunOptions {
  // Iteration cap for the parallel algorithm.
  int64_t max_iters = 1'000'000;
  // Threads for per-node sampling. Results do not depend on it.
  int jobs = 1;
  // Scales the removal-step epsilon'. Anything other than 1 breaks privacy;
  // it exists so the auditor can be checked against a broken mechanism.
  double eps_prime_multiplier = 1.0;
};

// Final step shared by all private algorithms: exponential mechanism over
// the candidates' densities with coefficient epsilon / 2. Fills selected,
// density and selected_index.
absl::Status SelectFinal(double epsilon, RngStream& rng, DPResult& result);

}  // namespace dpdense

#endif  // DPDENSE_RESULT_H_
