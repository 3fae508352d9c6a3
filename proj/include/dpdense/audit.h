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

#ifndef DPDENSE_AUDIT_H_
#define DPDENSE_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpdense/algorithm.h"
#include "dpdense/graph.h"
#include "dpdense/mechanisms.h"
#include "dpdense/random.h"
#include "dpdense/result.h"
#include "json.hpp"

namespace dpdense {

inline constexpr NodeId kAuditMaxNodes = 5;
inline constexpr int64_t kAuditMinSamples = 100'000;

struct AuditConfig {
  Algorithm algorithm = Algorithm::kSeq;
  PrivacyParams params;
  // The neighbouring graph is G with this edge toggled.
  Edge edge{0, 1};
  int64_t samples = 1'000'000;
  // Passed to the mechanism; eps_prime_multiplier != 1 gives a broken one.
  RunOptions run_options;
  // Threads over samples. Counts do not depend on it.
  int jobs = 1;
};

// One output event: the mechanism returned exactly `outcome`.
struct AuditRow {
  std::vector<NodeId> outcome;
  int64_t count_g = 0;
  int64_t count_neighbour = 0;
  double p_g = 0.0;
  double p_neighbour = 0.0;
  // p_G - e^eps p_G' - delta, and the reverse direction.
  double margin_forward = 0.0;
  double margin_backward = 0.0;
  // The margins minus three standard errors of their estimates.
  double adjusted_forward = 0.0;
  double adjusted_backward = 0.0;
};

struct AuditReport {
  AuditConfig config;
  std::vector<AuditRow> rows;
  double max_adjusted_margin = 0.0;
  // max_adjusted_margin <= 0: no statistically significant violation.
  bool passed = true;

  nlohmann::json ToJson() const;
};

// Empirical check of Pr[M(G) = S] <= e^eps Pr[M(G') = S] + delta, in both
// directions, for every subset S of the (at most 5) nodes. A necessary
// condition for (eps, delta)-DP, not a proof of it.
absl::StatusOr<AuditReport> AuditPrivacy(const Graph& graph,
                                         const AuditConfig& config,
                                         const RngStream& rng);

}  // namespace dpdense

#endif  // DPDENSE_AUDIT_H_
