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

#ifndef DPDENSE_GRAPH_H_
#define DPDENSE_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace dpdense {

using NodeId = uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Simple undirected graph on the vertex set {0, ..., n-1}, stored as sorted
// adjacency lists (CSR). Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Builds a graph, silently dropping self-loops and duplicate edges
  // (orientation is ignored). Counts of dropped entries are written to the
  // optional out-parameters.
  static absl::StatusOr<Graph> FromEdges(NodeId num_nodes,
                                         std::span<const Edge> edges,
                                         int64_t* self_loops = nullptr,
                                         int64_t* duplicates = nullptr);

  NodeId num_nodes() const { return num_nodes_; }
  int64_t num_edges() const { return static_cast<int64_t>(adj_.size() / 2); }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int64_t degree(NodeId v) const {
    return static_cast<int64_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool HasEdge(NodeId u, NodeId v) const;

  // All edges as (u, v) with u < v, in ascending order.
  std::vector<Edge> Edges() const;

  // The neighbouring graph obtained by adding (u, v) if absent, or removing it
  // if present.
  absl::StatusOr<Graph> WithEdgeToggled(NodeId u, NodeId v) const;

  // Identifier the node had in the ingested file. Identity unless the graph
  // was loaded with id remapping.
  uint64_t original_id(NodeId v) const {
    return original_ids_.empty() ? v : original_ids_[v];
  }
  void set_original_ids(std::vector<uint64_t> ids) {
    original_ids_ = std::move(ids);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_nodes_ == b.num_nodes_ && a.offsets_ == b.offsets_ &&
           a.adj_ == b.adj_;
  }

 private:
  NodeId num_nodes_ = 0;
  std::vector<uint64_t> offsets_{0};
  std::vector<NodeId> adj_;
  std::vector<uint64_t> original_ids_;
};

// Membership bitmap over {0, ..., universe-1} with a cached size.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(NodeId universe) : member_(universe, 0) {}

  static NodeSet Full(NodeId universe);
  static NodeSet FromIds(NodeId universe, std::span<const NodeId> ids);

  NodeId universe() const { return static_cast<NodeId>(member_.size()); }
  int64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(NodeId v) const { return v < member_.size() && member_[v]; }

  void Insert(NodeId v);
  void Erase(NodeId v);

  // Members in ascending id order.
  std::vector<NodeId> Members() const;

  friend bool operator==(const NodeSet& a, const NodeSet& b) = default;

 private:
  std::vector<uint8_t> member_;
  int64_t size_ = 0;
};

// rho(S) = |E[S]| / |S|, with rho(empty) = 0.
inline double Density(int64_t num_edges, int64_t num_nodes) {
  return num_nodes == 0
             ? 0.0
             : static_cast<double>(num_edges) / static_cast<double>(num_nodes);
}
int64_t InducedEdgeCount(const Graph& graph, const NodeSet& set);
double Density(const Graph& graph, const NodeSet& set);

// Induced-subgraph view used by every peeling algorithm. Keeps deg_S(v) for
// each v in S and |E[S]| up to date under node removal.
class PeelState {
 public:
  explicit PeelState(const Graph& graph);
  PeelState(const Graph& graph, const NodeSet& start);

  // Removes v from S in O(deg(v)). Fails if v is not in S.
  absl::Status RemoveNode(NodeId v);

  const Graph& graph() const { return *graph_; }
  const NodeSet& nodes() const { return nodes_; }
  bool contains(NodeId v) const { return nodes_.contains(v); }
  int64_t size() const { return nodes_.size(); }
  int64_t num_edges() const { return num_edges_; }
  double density() const { return Density(num_edges_, nodes_.size()); }

  // Number of neighbours of v inside S. Meaningful only for v in S.
  int64_t degree(NodeId v) const { return degrees_[v]; }

 private:
  const Graph* graph_;
  NodeSet nodes_;
  std::vector<int64_t> degrees_;
  int64_t num_edges_ = 0;
};

struct ParseOptions {
  // Forces n; every id must then be below it.
  std::optional<NodeId> num_nodes;
  // Compacts arbitrary ids to 0..n-1 in ascending order of original id and
  // keeps the original ids on the graph.
  bool remap_ids = false;
};

struct ParseReport {
  int64_t lines = 0;
  int64_t self_loops_dropped = 0;
  int64_t duplicates_dropped = 0;
  // From a SNAP-style "# Nodes: N Edges: M" comment, when present.
  std::optional<int64_t> header_nodes;
  std::optional<int64_t> header_edges;
};

// Reads a whitespace-separated edge list. Lines starting with '#' are
// comments. Without remapping or an override, n = max(max id + 1, header N).
absl::StatusOr<Graph> ParseEdgeList(std::istream& in,
                                    const ParseOptions& options = {},
                                    ParseReport* report = nullptr);
absl::StatusOr<Graph> ParseEdgeList(std::string_view text,
                                    const ParseOptions& options = {},
                                    ParseReport* report = nullptr);
absl::StatusOr<Graph> LoadEdgeListFile(const std::string& path,
                                       const ParseOptions& options = {},
                                       ParseReport* report = nullptr);

// Canonical form: a "# Nodes: N Edges: M" header, then "u v" per edge with
// u < v, ascending.
void WriteEdgeList(const Graph& graph, std::ostream& out);
absl::Status WriteEdgeListFile(const Graph& graph, const std::string& path);

// G(n, p): each of the C(n, 2) pairs present independently with probability p.
absl::StatusOr<Graph> GenerateErdosRenyi(NodeId n, double p, uint64_t seed);
// G(n, p) plus a clique on nodes 0..k-1.
absl::StatusOr<Graph> GeneratePlanted(NodeId n, NodeId k, double p,
                                      uint64_t seed);

}  // namespace dpdense

#endif  // DPDENSE_GRAPH_H_
