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

#include "dpdense/baseline.h"

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dpdense {

CharikarResult CharikarPeel(const Graph& graph) {
  CharikarResult result;
  const NodeId n = graph.num_nodes();
  result.nodes = NodeSet(n);
  if (n == 0) return result;

  PeelState state(graph);
  std::vector<std::set<NodeId>> buckets;
  for (NodeId v = 0; v < n; ++v) {
    const auto d = static_cast<size_t>(state.degree(v));
    if (d >= buckets.size()) buckets.resize(d + 1);
    buckets[d].insert(v);
  }

  PeelTrace& trace = result.trace;
  trace.steps.reserve(n);
  size_t min_degree = 0;
  double best_density = -1.0;
  for (NodeId step = 0; step < n; ++step) {
    while (buckets[min_degree].empty()) ++min_degree;
    const NodeId v = *buckets[min_degree].begin();
    const double density = state.density();
    trace.steps.push_back({v, state.size(), density});
    if (density > best_density) {
      best_density = density;
      trace.best_index = step;
    }
    buckets[min_degree].erase(buckets[min_degree].begin());
    for (NodeId u : graph.neighbors(v)) {
      if (!state.contains(u)) continue;
      const auto d = static_cast<size_t>(state.degree(u));
      buckets[d].erase(u);
      buckets[d - 1].insert(u);
    }
    // v is known to be in S, so this cannot fail.
    state.RemoveNode(v).IgnoreError();
    // A neighbour may now sit one bucket below the old minimum.
    if (min_degree > 0) --min_degree;
  }

  result.nodes = NodeSet::Full(n);
  for (size_t t = 0; t < trace.best_index; ++t) {
    result.nodes.Erase(trace.steps[t].removed);
  }
  result.density = best_density;
  return result;
}

absl::StatusOr<DensestResult> BruteForceDensest(const Graph& graph) {
  const NodeId n = graph.num_nodes();
  if (n > kBruteForceMaxNodes) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "brute force limited to ", kBruteForceMaxNodes, " nodes, got ", n));
  }
  DensestResult result;
  result.nodes = NodeSet(n);
  if (n == 0) return result;

  std::vector<uint32_t> adj(n, 0);
  for (const auto& [u, v] : graph.Edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // Lexicographic order on sorted member lists: the set whose smallest
  // differing element is smaller comes first.
  auto lex_less = [](uint32_t a, uint32_t b) {
    const uint32_t diff = a ^ b;
    const uint32_t lowest = diff & (~diff + 1);
    return (a & lowest) != 0;
  };

  uint32_t best_mask = 0;
  int64_t best_edges = 0;
  int64_t best_size = 0;
  const uint32_t limit = n == 32 ? 0xffffffffu : (1u << n) - 1;
  for (uint32_t mask = 1; mask != 0 && mask <= limit; ++mask) {
    int64_t twice = 0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      twice += std::popcount(adj[v] & mask);
    }
    const int64_t edges = twice / 2;
    const int64_t size = std::popcount(mask);
    bool better;
    if (best_size == 0) {
      better = true;
    } else {
      // Exact comparison of edges/size against best_edges/best_size.
      const int64_t lhs = edges * best_size;
      const int64_t rhs = best_edges * size;
      better =
          lhs > rhs ||
          (lhs == rhs && (size < best_size ||
                          (size == best_size && lex_less(mask, best_mask))));
    }
    if (better) {
      best_mask = mask;
      best_edges = edges;
      best_size = size;
    }
    if (mask == limit) break;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (best_mask & (1u << v)) result.nodes.Insert(v);
  }
  result.density = Density(best_edges, best_size);
  return result;
}

}  // namespace dpdense
