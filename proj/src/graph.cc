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

#include "dpdense/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "dpdense/random.h"

namespace dpdense {

absl::StatusOr<Graph> Graph::FromEdges(NodeId num_nodes,
                                       std::span<const Edge> edges,
                                       int64_t* self_loops,
                                       int64_t* duplicates) {
  std::vector<Edge> arcs;
  arcs.reserve(2 * edges.size());
  int64_t loops = 0;
  int64_t undirected = 0;
  for (const auto& [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) {
      return absl::InvalidArgumentError(absl::StrCat(
          "edge (", u, ", ", v, ") out of range for n=", num_nodes));
    }
    if (u == v) {
      ++loops;
      continue;
    }
    ++undirected;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.num_nodes_ = num_nodes;
  g.offsets_.assign(static_cast<size_t>(num_nodes) + 1, 0);
  g.adj_.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.adj_.push_back(v);
  }
  for (size_t i = 1; i < g.offsets_.size(); ++i) {
    g.offsets_[i] += g.offsets_[i - 1];
  }
  if (self_loops != nullptr) *self_loops = loops;
  if (duplicates != nullptr) *duplicates = undirected - g.num_edges();
  return g;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  if (u >= num_nodes_ || v >= num_nodes_) return false;
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(num_edges()));
  for (NodeId u = 0; u < num_nodes_; ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

absl::StatusOr<Graph> Graph::WithEdgeToggled(NodeId u, NodeId v) const {
  if (u == v || u >= num_nodes_ || v >= num_nodes_) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot toggle edge (", u, ", ", v, ")"));
  }
  std::vector<Edge> edges = Edges();
  const Edge e = std::minmax(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it != edges.end() && *it == e) {
    edges.erase(it);
  } else {
    edges.insert(it, e);
  }
  auto g = FromEdges(num_nodes_, edges);
  if (g.ok()) g->original_ids_ = original_ids_;
  return g;
}

NodeSet NodeSet::Full(NodeId universe) {
  NodeSet s(universe);
  std::fill(s.member_.begin(), s.member_.end(), 1);
  s.size_ = universe;
  return s;
}

NodeSet NodeSet::FromIds(NodeId universe, std::span<const NodeId> ids) {
  NodeSet s(universe);
  for (NodeId v : ids) s.Insert(v);
  return s;
}

void NodeSet::Insert(NodeId v) {
  if (!member_[v]) {
    member_[v] = 1;
    ++size_;
  }
}

void NodeSet::Erase(NodeId v) {
  if (member_[v]) {
    member_[v] = 0;
    --size_;
  }
}

std::vector<NodeId> NodeSet::Members() const {
  std::vector<NodeId> out;
  out.reserve(static_cast<size_t>(size_));
  for (NodeId v = 0; v < member_.size(); ++v) {
    if (member_[v]) out.push_back(v);
  }
  return out;
}

int64_t InducedEdgeCount(const Graph& graph, const NodeSet& set) {
  int64_t twice = 0;
  for (NodeId v : set.Members()) {
    for (NodeId u : graph.neighbors(v)) {
      if (set.contains(u)) ++twice;
    }
  }
  return twice / 2;
}

double Density(const Graph& graph, const NodeSet& set) {
  return Density(InducedEdgeCount(graph, set), set.size());
}

PeelState::PeelState(const Graph& graph)
    : PeelState(graph, NodeSet::Full(graph.num_nodes())) {}

PeelState::PeelState(const Graph& graph, const NodeSet& start)
    : graph_(&graph), nodes_(start), degrees_(graph.num_nodes(), 0) {
  int64_t twice = 0;
  for (NodeId v : nodes_.Members()) {
    int64_t d = 0;
    for (NodeId u : graph.neighbors(v)) {
      if (nodes_.contains(u)) ++d;
    }
    degrees_[v] = d;
    twice += d;
  }
  num_edges_ = twice / 2;
}

absl::Status PeelState::RemoveNode(NodeId v) {
  if (!nodes_.contains(v)) {
    return absl::FailedPreconditionError(
        absl::StrCat("node ", v, " is not in the current set"));
  }
  nodes_.Erase(v);
  num_edges_ -= degrees_[v];
  degrees_[v] = 0;
  for (NodeId u : graph_->neighbors(v)) {
    if (nodes_.contains(u)) --degrees_[u];
  }
  return absl::OkStatus();
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Picks up "Nodes: N" / "Edges: M" from SNAP header comments.
void ScanHeader(std::string_view line, ParseReport& report) {
  auto grab = [&](std::string_view tag) -> std::optional<int64_t> {
    const auto pos = line.find(tag);
    if (pos == std::string_view::npos) return std::nullopt;
    std::string_view rest = Trim(line.substr(pos + tag.size()));
    int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr == rest.data()) return std::nullopt;
    return value;
  };
  if (auto n = grab("Nodes:")) report.header_nodes = n;
  if (auto m = grab("Edges:")) report.header_edges = m;
}

bool ParseId(std::string_view token, uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

absl::StatusOr<Graph> ParseEdgeList(std::istream& in,
                                    const ParseOptions& options,
                                    ParseReport* report) {
  ParseReport local;
  ParseReport& rep = report != nullptr ? *report : local;
  rep = ParseReport{};

  std::vector<std::pair<uint64_t, uint64_t>> raw;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      ScanHeader(view, rep);
      continue;
    }
    const auto split = view.find_first_of(" \t");
    uint64_t u = 0;
    uint64_t v = 0;
    if (split == std::string_view::npos || !ParseId(view.substr(0, split), u) ||
        !ParseId(Trim(view.substr(split)), v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": expected two non-negative integer ",
                       "node ids, got '", std::string(view), "'"));
    }
    raw.emplace_back(u, v);
  }
  rep.lines = line_no;

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::vector<uint64_t> original_ids;
  NodeId n = 0;
  if (options.remap_ids) {
    std::vector<uint64_t> ids;
    ids.reserve(2 * raw.size());
    for (const auto& [u, v] : raw) {
      ids.push_back(u);
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto dense = [&](uint64_t id) {
      return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) -
                                 ids.begin());
    };
    for (const auto& [u, v] : raw) edges.emplace_back(dense(u), dense(v));
    n = static_cast<NodeId>(ids.size());
    if (options.num_nodes.has_value()) {
      if (*options.num_nodes < n) {
        return absl::InvalidArgumentError(absl::StrCat(
            "file has ", n, " distinct ids but n=", *options.num_nodes,
            " was requested"));
      }
      n = *options.num_nodes;
    }
    original_ids = std::move(ids);
  } else {
    uint64_t max_id = 0;
    for (const auto& [u, v] : raw) max_id = std::max({max_id, u, v});
    uint64_t count = raw.empty() ? 0 : max_id + 1;
    if (options.num_nodes.has_value()) {
      if (!raw.empty() && max_id >= *options.num_nodes) {
        return absl::InvalidArgumentError(absl::StrCat(
            "node id ", max_id, " out of range for n=", *options.num_nodes));
      }
      count = *options.num_nodes;
    } else if (rep.header_nodes.has_value() &&
               static_cast<uint64_t>(*rep.header_nodes) > count) {
      count = static_cast<uint64_t>(*rep.header_nodes);
    }
    if (count > std::numeric_limits<NodeId>::max()) {
      return absl::InvalidArgumentError("node count exceeds 32-bit ids");
    }
    n = static_cast<NodeId>(count);
    for (const auto& [u, v] : raw) {
      edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }

  auto graph = Graph::FromEdges(n, edges, &rep.self_loops_dropped,
                                &rep.duplicates_dropped);
  if (graph.ok() && options.remap_ids) {
    original_ids.resize(n);
    // Padding nodes requested through num_nodes get ids past the largest one.
    for (size_t i = 0; i < original_ids.size(); ++i) {
      if (i > 0 && original_ids[i] <= original_ids[i - 1]) {
        original_ids[i] = original_ids[i - 1] + 1;
      }
    }
    graph->set_original_ids(std::move(original_ids));
  }
  return graph;
}

absl::StatusOr<Graph> ParseEdgeList(std::string_view text,
                                    const ParseOptions& options,
                                    ParseReport* report) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in, options, report);
}

absl::StatusOr<Graph> LoadEdgeListFile(const std::string& path,
                                       const ParseOptions& options,
                                       ParseReport* report) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return ParseEdgeList(in, options, report);
}

void WriteEdgeList(const Graph& graph, std::ostream& out) {
  out << "# Nodes: " << graph.num_nodes() << " Edges: " << graph.num_edges()
      << "\n";
  for (const auto& [u, v] : graph.Edges()) out << u << ' ' << v << '\n';
}

absl::Status WriteEdgeListFile(const Graph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  WriteEdgeList(graph, out);
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<Graph> GenerateErdosRenyi(NodeId n, double p, uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge probability must be in [0, 1], got ", p));
  }
  RngStream rng = RngStream(seed).Substream("generate.er");
  std::vector<Edge> edges;
  if (p > 0.0) {
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (rng.NextUniform() < p) edges.emplace_back(u, v);
      }
    }
  }
  return Graph::FromEdges(n, edges);
}

absl::StatusOr<Graph> GeneratePlanted(NodeId n, NodeId k, double p,
                                      uint64_t seed) {
  if (k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("clique size ", k, " exceeds n=", n));
  }
  auto base = GenerateErdosRenyi(n, p, seed);
  if (!base.ok()) return base.status();
  std::vector<Edge> edges = base->Edges();
  for (NodeId u = 0; u < k; ++u) {
    for (NodeId v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace dpdense
