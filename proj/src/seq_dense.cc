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

#include "dpdense/seq_dense.h"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "dpdense/status_macros.h"

namespace dpdense {
namespace {

// Live nodes grouped by current degree, with O(1) moves between buckets.
class DegreeBuckets {
 public:
  explicit DegreeBuckets(const PeelState& state)
      : position_(state.graph().num_nodes(), 0) {
    for (NodeId v : state.nodes().Members()) {
      Insert(v, static_cast<size_t>(state.degree(v)));
    }
    low_ = 0;
  }

  void Erase(NodeId v, size_t degree) {
    auto& bucket = buckets_[degree];
    const NodeId last = bucket.back();
    bucket[position_[v]] = last;
    position_[last] = position_[v];
    bucket.pop_back();
  }

  void Insert(NodeId v, size_t degree) {
    if (degree >= buckets_.size()) {
      buckets_.resize(degree + 1);
      high_ = degree;
    }
    position_[v] = static_cast<uint32_t>(buckets_[degree].size());
    buckets_[degree].push_back(v);
    if (degree < low_) low_ = degree;
  }

  // Bounds of the non-empty degree range; only valid while non-empty.
  size_t low() {
    while (buckets_[low_].empty()) ++low_;
    return low_;
  }
  size_t high() {
    while (buckets_[high_].empty()) --high_;
    return high_;
  }

  const std::vector<NodeId>& bucket(size_t degree) const {
    return buckets_[degree];
  }

 private:
  std::vector<std::vector<NodeId>> buckets_;
  std::vector<uint32_t> position_;
  size_t low_ = 0;
  size_t high_ = 0;
};

}  // namespace

SeqConstants SeqConstants::From(const PrivacyParams& params,
                                double multiplier) {
  return {multiplier * params.epsilon /
          (4.0 * std::log(std::exp(1.0) / params.delta))};
}

absl::StatusOr<DPResult> RunSeq(const Graph& graph, const PrivacyParams& params,
                                RngStream& rng, const RunOptions& options) {
  DPDENSE_RETURN_IF_ERROR(params.Validate());
  const auto start = std::chrono::steady_clock::now();
  const SeqConstants constants =
      SeqConstants::From(params, options.eps_prime_multiplier);
  const NodeId n = graph.num_nodes();

  DPResult result;
  result.seed = rng.seed();
  result.trace.num_nodes = n;
  result.trace.removal_order.reserve(n);
  result.trace.candidates.reserve(n);

  PeelState state(graph);
  DegreeBuckets buckets(state);
  RngStream removal_rng = rng.Substream("seq.remove");
  std::vector<double> log_weights;
  std::vector<size_t> degrees;
  for (NodeId step = 0; step < n; ++step) {
    result.trace.RecordDistinct(state.size(), state.num_edges());

    // Choosing a degree class with weight count_d * exp(-eps' d) and then a
    // uniform member is the same distribution as per-node selection.
    log_weights.clear();
    degrees.clear();
    const size_t high = buckets.high();
    for (size_t d = buckets.low(); d <= high; ++d) {
      const size_t count = buckets.bucket(d).size();
      if (count == 0) continue;
      log_weights.push_back(std::log(static_cast<double>(count)) -
                            constants.eps_prime * static_cast<double>(d));
      degrees.push_back(d);
    }
    DPDENSE_ASSIGN_OR_RETURN(const size_t pick,
                             ExpSelectLogWeights(log_weights, removal_rng));
    const auto& members = buckets.bucket(degrees[pick]);
    const NodeId v = members[removal_rng.NextBelow(members.size())];

    buckets.Erase(v, degrees[pick]);
    for (NodeId u : graph.neighbors(v)) {
      if (!state.contains(u)) continue;
      const auto d = static_cast<size_t>(state.degree(u));
      buckets.Erase(u, d);
      buckets.Insert(u, d - 1);
    }
    DPDENSE_RETURN_IF_ERROR(state.RemoveNode(v));
    result.trace.removal_order.push_back(v);
  }
  result.iterations = n;

  RngStream select_rng = rng.Substream("seq.select");
  DPDENSE_RETURN_IF_ERROR(SelectFinal(params.epsilon, select_rng, result));
  result.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace dpdense
