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

#include "dpdense/result.h"

#include <vector>

#include "absl/status/status.h"
#include "dpdense/mechanisms.h"
#include "dpdense/status_macros.h"

namespace dpdense {

NodeSet CandidateTrace::Materialize(size_t index) const {
  NodeSet set = NodeSet::Full(num_nodes);
  for (size_t i = 0; i < candidates[index].removed; ++i) {
    set.Erase(removal_order[i]);
  }
  return set;
}

void CandidateTrace::RecordDistinct(int64_t size, int64_t num_edges) {
  if (size == 0) return;
  if (!candidates.empty() && candidates.back().size == size) return;
  candidates.push_back(
      {removal_order.size(), size, num_edges, Density(num_edges, size)});
}

absl::Status SelectFinal(double epsilon, RngStream& rng, DPResult& result) {
  const auto& candidates = result.trace.candidates;
  if (candidates.empty()) {
    result.selected = NodeSet(result.trace.num_nodes);
    result.density = 0.0;
    return absl::OkStatus();
  }
  std::vector<double> densities;
  densities.reserve(candidates.size());
  for (const Candidate& c : candidates) densities.push_back(c.density);
  DPDENSE_ASSIGN_OR_RETURN(result.selected_index,
                           ExpSelect(densities, epsilon / 2.0, rng));
  result.selected = result.trace.Materialize(result.selected_index);
  result.density = candidates[result.selected_index].density;
  return absl::OkStatus();
}

}  // namespace dpdense
