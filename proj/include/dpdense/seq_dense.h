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

#ifndef DPDENSE_SEQ_DENSE_H_
#define DPDENSE_SEQ_DENSE_H_

#include "absl/status/statusor.h"
#include "dpdense/graph.h"
#include "dpdense/mechanisms.h"
#include "dpdense/random.h"
#include "dpdense/result.h"

namespace dpdense {

struct SeqConstants {
  // epsilon / (4 ln(e / delta))
  double eps_prime = 0.0;

  static SeqConstants From(const PrivacyParams& params,
                           double multiplier = 1.0);
};

// Sequential private peeling. Each of the n steps removes one node of the
// current set S with probability proportional to exp(-eps' deg_S(v)); the
// output is drawn from S_0, ..., S_{n-1} with weights exp(epsilon rho / 2).
absl::StatusOr<DPResult> RunSeq(const Graph& graph, const PrivacyParams& params,
                                RngStream& rng, const RunOptions& options = {});

}  // namespace dpdense

#endif  // DPDENSE_SEQ_DENSE_H_
