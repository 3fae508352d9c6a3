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

#ifndef DPDENSE_METRICS_H_
#define DPDENSE_METRICS_H_

#include "absl/status/statusor.h"
#include "dpdense/graph.h"

namespace dpdense {

// rho(private) / rho(baseline). Undefined when the baseline has density 0.
absl::StatusOr<double> RelativeDensity(const Graph& graph,
                                       const NodeSet& private_set,
                                       const NodeSet& baseline_set);
absl::StatusOr<double> RelativeDensity(double private_density,
                                       double baseline_density);

// |a & b| / |a | b|; 1 when both are empty.
double Jaccard(const NodeSet& a, const NodeSet& b);

// |a & b| / |b|. Undefined for empty b.
absl::StatusOr<double> Recall(const NodeSet& a, const NodeSet& b);

}  // namespace dpdense

#endif  // DPDENSE_METRICS_H_
