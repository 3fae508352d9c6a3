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

#ifndef DPDENSE_PAR_DENSE_H_
#define DPDENSE_PAR_DENSE_H_

#include "absl/status/statusor.h"
#include "dpdense/graph.h"
#include "dpdense/mechanisms.h"
#include "dpdense/random.h"
#include "dpdense/result.h"

namespace dpdense {

struct ParConstants {
  // (1 - 1/e) / (8 ln(e / delta)) * epsilon
  double eps_prime = 0.0;
  // 1 / eps_prime + 1
  double c = 0.0;

  static ParConstants From(const PrivacyParams& params,
                           double multiplier = 1.0);

  // exp(-eps' (degree + c))
  double RemovalProbability(int64_t degree) const;
};

// Parallel private peeling. Every round, each node of S is removed
// independently with probability exp(-eps' (deg_S(v) + c)), degrees frozen at
// the start of the round. Output drawn from the distinct candidate sets.
//
// Stops after options.max_iters rounds and sets result.truncated if S is
// still non-empty.
absl::StatusOr<DPResult> RunPar(const Graph& graph, const PrivacyParams& params,
                                RngStream& rng, const RunOptions& options = {});

}  // namespace dpdense

#endif  // DPDENSE_PAR_DENSE_H_
