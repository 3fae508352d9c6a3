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
#include <sstream>
#include <string>
#include <vector>

#include "dpdense/random.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dpdense {
namespace {

using ::dpdense::testing::Clique;
using ::dpdense::testing::MakeGraph;
using ::testing::ElementsAre;

TEST(GraphTest, FromEdgesDropsLoopsAndDuplicates) {
  const std::vector<Edge> edges = {{0, 1}, {1, 0}, {2, 2}, {1, 2}, {0, 1}};
  int64_t loops = 0, dups = 0;
  auto graph = Graph::FromEdges(3, edges, &loops, &dups);
  ASSERT_TRUE(graph.ok());
  EXPECT_EQ(graph->num_edges(), 2);
  EXPECT_EQ(loops, 1);
  EXPECT_EQ(dups, 2);
  EXPECT_TRUE(graph->HasEdge(1, 0));
  EXPECT_FALSE(graph->HasEdge(0, 2));
  EXPECT_THAT(graph->Edges(), ElementsAre(Edge{0, 1}, Edge{1, 2}));
}

TEST(GraphTest, FromEdgesRejectsOutOfRangeIds) {
  const std::vector<Edge> edges = {{0, 3}};
  EXPECT_FALSE(Graph::FromEdges(3, edges).ok());
}

TEST(GraphTest, WithEdgeToggled) {
  const Graph g = MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}});
  auto added = g.WithEdgeToggled(0, 2);
  ASSERT_TRUE(added.ok());
  EXPECT_EQ(added->num_edges(), 4);
  EXPECT_TRUE(added->HasEdge(0, 2));
  auto removed = added->WithEdgeToggled(2, 0);
  ASSERT_TRUE(removed.ok());
  EXPECT_EQ(*removed, g);
}

TEST(DensityTest, Examples) {
  const Graph k4 = Clique(4);
  EXPECT_DOUBLE_EQ(Density(k4, NodeSet::Full(4)), 1.5);
  const Graph path = MakeGraph(3, {{0, 1}, {1, 2}});
  EXPECT_DOUBLE_EQ(Density(path, NodeSet::Full(3)), 2.0 / 3.0);
  EXPECT_EQ(Density(path, NodeSet(3)), 0.0);
}

TEST(DensityTest, CliqueIsHalfSizeMinusOne) {
  for (NodeId a = 1; a <= 30; ++a) {
    EXPECT_EQ(Density(Clique(a), NodeSet::Full(a)), (a - 1) / 2.0) << a;
  }
}

TEST(NodeSetTest, InsertEraseMembers) {
  NodeSet s(6);
  s.Insert(4);
  s.Insert(1);
  s.Insert(4);
  EXPECT_EQ(s.size(), 2);
  EXPECT_THAT(s.Members(), ElementsAre(1, 4));
  s.Erase(1);
  s.Erase(1);
  EXPECT_EQ(s.size(), 1);
  EXPECT_FALSE(s.contains(1));
  EXPECT_FALSE(s.contains(17));
}

TEST(PeelStateTest, TriangleRemoval) {
  const Graph g = Clique(3);
  PeelState state(g);
  ASSERT_TRUE(state.RemoveNode(0).ok());
  EXPECT_EQ(state.size(), 2);
  EXPECT_EQ(state.degree(1), 1);
  EXPECT_EQ(state.degree(2), 1);
  EXPECT_EQ(state.num_edges(), 1);
}

TEST(PeelStateTest, StarCentreRemoval) {
  const Graph g = MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}});
  PeelState state(g);
  ASSERT_TRUE(state.RemoveNode(0).ok());
  EXPECT_EQ(state.num_edges(), 0);
  for (NodeId v = 1; v < 4; ++v) EXPECT_EQ(state.degree(v), 0);
}

TEST(PeelStateTest, RemovingAbsentNodeFails) {
  const Graph g = Clique(3);
  PeelState state(g);
  ASSERT_TRUE(state.RemoveNode(1).ok());
  EXPECT_EQ(state.RemoveNode(1).code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_FALSE(state.RemoveNode(7).ok());
}

// Live degrees against a from-scratch recount after every removal.
TEST(PeelStateTest, DegreesMatchRecount) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    auto g = GenerateErdosRenyi(12, 0.4, seed);
    ASSERT_TRUE(g.ok());
    PeelState state(*g);
    std::vector<NodeId> order(12);
    for (NodeId v = 0; v < 12; ++v) order[v] = v;
    RngStream rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    for (NodeId removed : order) {
      ASSERT_TRUE(state.RemoveNode(removed).ok());
      int64_t twice_edges = 0;
      for (NodeId v = 0; v < 12; ++v) {
        if (!state.contains(v)) continue;
        int64_t recount = 0;
        for (NodeId u : g->neighbors(v)) recount += state.contains(u);
        EXPECT_EQ(state.degree(v), recount);
        twice_edges += recount;
      }
      EXPECT_EQ(state.num_edges() * 2, twice_edges);
      EXPECT_EQ(state.num_edges(), InducedEdgeCount(*g, state.nodes()));
    }
  }
}

TEST(GeneratorTest, EdgelessAtZero) {
  auto g = GenerateErdosRenyi(10, 0.0, 5);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->num_nodes(), 10u);
  EXPECT_EQ(g->num_edges(), 0);
}

TEST(GeneratorTest, PlantedCliqueOnly) {
  auto g = GeneratePlanted(100, 20, 0.0, 1);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->num_edges(), 190);
  std::vector<NodeId> clique(20);
  for (NodeId v = 0; v < 20; ++v) clique[v] = v;
  EXPECT_DOUBLE_EQ(Density(*g, NodeSet::FromIds(100, clique)), 9.5);
  for (NodeId v = 20; v < 100; ++v) EXPECT_EQ(g->degree(v), 0);
}

TEST(GeneratorTest, PlantedContainsClique) {
  auto g = GeneratePlanted(60, 12, 0.1, 9);
  ASSERT_TRUE(g.ok());
  for (NodeId u = 0; u < 12; ++u) {
    for (NodeId v = u + 1; v < 12; ++v) EXPECT_TRUE(g->HasEdge(u, v));
  }
}

TEST(GeneratorTest, DeterministicForSeed) {
  auto a = GenerateErdosRenyi(50, 0.2, 42);
  auto b = GenerateErdosRenyi(50, 0.2, 42);
  auto c = GenerateErdosRenyi(50, 0.2, 43);
  ASSERT_TRUE(a.ok() && b.ok() && c.ok());
  EXPECT_EQ(*a, *b);
  EXPECT_NE(a->Edges(), c->Edges());
}

TEST(GeneratorTest, RejectsBadParameters) {
  EXPECT_FALSE(GenerateErdosRenyi(10, -0.1, 1).ok());
  EXPECT_FALSE(GenerateErdosRenyi(10, 1.5, 1).ok());
  EXPECT_FALSE(GeneratePlanted(10, 11, 0.1, 1).ok());
}

TEST(ParseTest, SnapStyleInput) {
  const std::string text =
      "# Directed graph (each unordered pair of nodes is saved once)\n"
      "# Nodes: 6 Edges: 4\n"
      "# FromNodeId\tToNodeId\n"
      "0\t1\n"
      "1\t0\n"
      "2\t2\n"
      "3 4\n"
      "\n"
      "1 3\n";
  ParseReport report;
  auto g = ParseEdgeList(text, {}, &report);
  ASSERT_TRUE(g.ok()) << g.status();
  EXPECT_EQ(g->num_nodes(), 6u);
  EXPECT_EQ(g->num_edges(), 3);
  EXPECT_EQ(report.self_loops_dropped, 1);
  EXPECT_EQ(report.duplicates_dropped, 1);
  EXPECT_EQ(report.header_nodes, 6);
}

TEST(ParseTest, MalformedLineReportsLineNumber) {
  auto g = ParseEdgeList("0 1\n1 x\n", {});
  ASSERT_FALSE(g.ok());
  EXPECT_EQ(g.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(std::string(g.status().message()), ::testing::HasSubstr("2"));
}

TEST(ParseTest, RemapCompactsIds) {
  ParseOptions options;
  options.remap_ids = true;
  auto g = ParseEdgeList("100 7\n7 55\n", options);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->num_nodes(), 3u);
  EXPECT_EQ(g->original_id(0), 7u);
  EXPECT_EQ(g->original_id(1), 55u);
  EXPECT_EQ(g->original_id(2), 100u);
  EXPECT_TRUE(g->HasEdge(0, 2));
  EXPECT_TRUE(g->HasEdge(0, 1));
}

TEST(ParseTest, WriteThenParseRoundTrips) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto g = GenerateErdosRenyi(40, 0.15, seed);
    ASSERT_TRUE(g.ok());
    std::ostringstream out;
    WriteEdgeList(*g, out);
    auto back = ParseEdgeList(out.str(), {});
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(*back, *g);
  }
}

TEST(ParseTest, HeaderKeepsTrailingIsolatedNodes) {
  auto g = GeneratePlanted(100, 20, 0.0, 1);
  ASSERT_TRUE(g.ok());
  std::ostringstream out;
  WriteEdgeList(*g, out);
  auto back = ParseEdgeList(out.str(), {});
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back->num_nodes(), 100u);
}

}  // namespace
}  // namespace dpdense
