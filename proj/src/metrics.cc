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

#include "dpdense/metrics.h"

#include <algorithm>
#include <cstdint>

#include "absl/status/status.h"

namespace dpdense {
namespace {

int64_t IntersectionSize(const NodeSet& a, const NodeSet& b) {
  const NodeSet& small = a.size() <= b.size() ? a : b;
  const NodeSet& large = a.size() <= b.size() ? b : a;
  int64_t count = 0;
  for (NodeId v : small.Members()) count += large.contains(v) ? 1 : 0;
  return count;
}

}  // namespace

absl::StatusOr<double> RelativeDensity(double private_density,
                                       double baseline_density) {
  if (!(baseline_density > 0.0)) {
    return absl::FailedPreconditionError(
        "relative density undefined: baseline density is 0");
  }
  return private_density / baseline_density;
}

absl::StatusOr<double> RelativeDensity(const Graph& graph,
                                       const NodeSet& private_set,
                                       const NodeSet& baseline_set) {
  return RelativeDensity(Density(graph, private_set),
                         Density(graph, baseline_set));
}

double Jaccard(const NodeSet& a, const NodeSet& b) {
  const int64_t common = IntersectionSize(a, b);
  const int64_t united = a.size() + b.size() - common;
  if (united == 0) return 1.0;
  return static_cast<double>(common) / static_cast<double>(united);
}

absl::StatusOr<double> Recall(const NodeSet& a, const NodeSet& b) {
  if (b.empty()) {
    return absl::FailedPreconditionError("recall undefined: empty reference");
  }
  return static_cast<double>(IntersectionSize(a, b)) /
         static_cast<double>(b.size());
}

}  // namespace dpdense
