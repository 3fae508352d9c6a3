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

#ifndef DPDENSE_PHASE_DENSE_H_
#define DPDENSE_PHASE_DENSE_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "dpdense/graph.h"
#include "dpdense/mechanisms.h"
#include "dpdense/random.h"
#include "dpdense/result.h"

namespace dpdense {

struct PhaseConstants {
  // (1 - 1/e) / (24 ln(4 / delta)) * epsilon
  double eps_prime = 0.0;
  // 1 / eps_prime + 1
  double c = 0.0;

  static PhaseConstants From(const PrivacyParams& params,
                             double multiplier = 1.0);

  // ln P_v = -eps' (degree + c)
  double LogRemovalProbability(int64_t degree) const;
};

struct PhaseBudget {
  // rho + (16 / epsilon) ln n + Laplace(4 ln n / (|S| epsilon))
  double noisy_density = 0.0;
  // ln T_i = eps' (4 noisy_density + c) + ln(4 ln n)
  double log_budget = 0.0;
};

// True when a phase over `size` remaining nodes removes them all at once:
// |S| <= ln n for the original n, and always for a single-node graph.
bool IsShortcutPhase(NodeId num_nodes, int64_t size);

// The coordinator's per-phase draw. Uses the (phase)-keyed substream of
// `root`, so the phase-based algorithm and its Map-Reduce replay agree.
absl::StatusOr<PhaseBudget> DrawPhaseBudget(const PhaseConstants& constants,
                                            const PrivacyParams& params,
                                            NodeId num_nodes, int64_t size,
                                            double density, int64_t phase,
                                            const RngStream& root);

// Draws the node's geometric race time T_v ~ Geometric(P_v) from its
// (phase, node)-keyed substream and reports whether ln T_v <= ln T_i.
absl::StatusOr<bool> RemovedInPhase(const PhaseConstants& constants,
                                    int64_t degree, double log_budget,
                                    int64_t phase, NodeId v,
                                    const RngStream& root);

// Phase-based private peeling with O(log n) phases w.h.p. Degrees are frozen
// for a whole phase; a node leaves in the phase if its geometric race time is
// within the noisy-density budget. The output is drawn from the distinct
// candidate sets with weights exp(epsilon rho / 2).
absl::StatusOr<DPResult> RunPhase(const Graph& graph,
                                  const PrivacyParams& params, RngStream& rng,
                                  const RunOptions& options = {});

// Selection stream shared with the Map-Reduce replay.
inline constexpr char kPhaseSelectLabel[] = "phase.select";

}  // namespace dpdense

#endif  // DPDENSE_PHASE_DENSE_H_
