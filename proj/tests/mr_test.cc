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

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dpdense/graph.h"
#include "dpdense/mr_dense.h"
#include "dpdense/mr_engine.h"
#include "dpdense/phase_dense.h"
#include "dpdense/random.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.h"

namespace dpdense {
namespace {

using ::dpdense::testing::Clique;
using ::dpdense::testing::Layered;
using ::dpdense::testing::MakeGraph;
using ::testing::ElementsAre;
using ::testing::Pair;

using IntRecords = mr::Records<int, int>;

IntRecords Collect(const int& key, std::span<const int> values) {
  IntRecords out;
  for (int v : values) out.emplace_back(key, v);
  return out;
}

TEST(MrEngineTest, GroupsByKeyInOrder) {
  const IntRecords input = {{2, 1}, {1, 3}, {1, 2}};
  std::vector<std::pair<int, std::vector<int>>> groups;
  mr::ReduceByKey(input, [&](const int& key, std::span<const int> values) {
    groups.emplace_back(key, std::vector<int>(values.begin(), values.end()));
    return IntRecords{};
  });
  EXPECT_THAT(groups,
              ElementsAre(Pair(1, ElementsAre(2, 3)), Pair(2, ElementsAre(1))));
}

TEST(MrEngineTest, IdentityMapKeepsMultiset) {
  IntRecords input = {{3, 1}, {1, 1}, {3, 1}, {0, 9}};
  IntRecords out = mr::Map(
      input, [](const std::pair<int, int>& r) { return IntRecords{r}; });
  std::sort(input.begin(), input.end());
  EXPECT_EQ(out, input);
}

TEST(MrEngineTest, DegreeCountOnTriangle) {
  IntRecords directed;
  for (const auto& [u, v] : Clique(3).Edges()) {
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  ASSERT_EQ(directed.size(), 6u);
  const IntRecords degrees =
      mr::ReduceByKey(directed, [](const int& key, std::span<const int> vs) {
        return IntRecords{{key, static_cast<int>(vs.size())}};
      });
  EXPECT_THAT(degrees, ElementsAre(Pair(0, 2), Pair(1, 2), Pair(2, 2)));
}

TEST(MrEngineTest, ShuffledInputGivesSameOutput) {
  IntRecords input;
  RngStream rng(1);
  for (int i = 0; i < 500; ++i) {
    input.emplace_back(static_cast<int>(rng.NextBelow(40)),
                       static_cast<int>(rng.NextBelow(1000)));
  }
  const IntRecords reference = mr::ReduceByKey(input, Collect);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(input.begin(), input.end(), rng);
    EXPECT_EQ(mr::ReduceByKey(input, Collect, 1 + round % 4), reference);
  }
}

TEST(MrDenseTest, InitialRecordsCarryAdjacencyAndPresence) {
  const Graph g = MakeGraph(3, {{0, 1}});
  const auto records = InitialRecords(g);
  EXPECT_EQ(records.size(), 5u);
  int present = 0;
  for (const auto& [key, value] : records) {
    present += std::get<int64_t>(value) == kPresent;
  }
  EXPECT_EQ(present, 3);
}

TEST(MrDenseTest, SingleNode) {
  const Graph g = MakeGraph(1, {});
  RngStream rng(1);
  auto r = RunMrDense(g, {1.0, 0.5}, rng);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->phases, 1);
  EXPECT_THAT(r->selected.Members(), ElementsAre(0));
}

TEST(MrDenseTest, TriangleDensityFromDegreeSum) {
  const Graph g = Clique(3);
  RngStream rng(3);
  std::ostringstream trace;
  auto r = RunMrDense(g, {1.0, 0.5}, rng, {}, &trace);
  ASSERT_TRUE(r.ok());
  ASSERT_FALSE(r->phase_records.empty());
  EXPECT_DOUBLE_EQ(r->phase_records[0].density, 1.0);
  std::istringstream lines(trace.str());
  std::string line;
  bool seen = false;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j["phase"] == 0 && j["subphase"] == "reduce_degree_sum") {
      EXPECT_EQ(j["records"][0][1], 6);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

void ExpectSameRun(const DPResult& a, const DPResult& b) {
  ASSERT_EQ(a.trace.candidates.size(), b.trace.candidates.size());
  for (size_t i = 0; i < a.trace.candidates.size(); ++i) {
    EXPECT_EQ(a.trace.candidates[i].size, b.trace.candidates[i].size);
    EXPECT_EQ(a.trace.candidates[i].num_edges, b.trace.candidates[i].num_edges);
    EXPECT_EQ(a.trace.Materialize(i), b.trace.Materialize(i));
  }
  EXPECT_EQ(a.trace.removal_order, b.trace.removal_order);
  EXPECT_EQ(a.selected, b.selected);
  EXPECT_EQ(a.selected_index, b.selected_index);
  EXPECT_EQ(a.phases, b.phases);
  ASSERT_EQ(a.phase_records.size(), b.phase_records.size());
  for (size_t i = 0; i < a.phase_records.size(); ++i) {
    EXPECT_EQ(a.phase_records[i].noisy_density,
              b.phase_records[i].noisy_density);
    EXPECT_EQ(a.phase_records[i].removed, b.phase_records[i].removed);
  }
}

TEST(MrDenseTest, MatchesPhaseAlgorithm) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    RngStream shape(seed);
    const NodeId n = 5 + static_cast<NodeId>(shape.NextBelow(150));
    auto g = GenerateErdosRenyi(n, 0.02 + 0.2 * shape.NextUniform(), seed);
    ASSERT_TRUE(g.ok());
    const PrivacyParams params{1.0 + 200.0 * shape.NextUniform(), 0.1};
    RngStream a(seed), b(seed);
    auto phase = RunPhase(*g, params, a);
    auto mr = RunMrDense(*g, params, b);
    ASSERT_TRUE(phase.ok() && mr.ok());
    ExpectSameRun(*phase, *mr);
  }
}

TEST(MrDenseTest, MatchesPhaseAlgorithmOnLayeredGraphs) {
  const Graph graphs[] = {Layered({256, 32, 4, 1}), Layered({90, 30, 3}),
                          Layered({200, 50, 12, 3, 1})};
  for (uint64_t seed = 0; seed < 6; ++seed) {
    for (const Graph& g : graphs) {
      RngStream a(seed), b(seed);
      auto phase = RunPhase(g, {100.0 * (seed + 1), 0.1}, a);
      auto mr = RunMrDense(g, {100.0 * (seed + 1), 0.1}, b);
      ASSERT_TRUE(phase.ok() && mr.ok());
      EXPECT_GE(phase->phases, 2);
      ExpectSameRun(*phase, *mr);
    }
  }
}

TEST(MrDenseTest, IndependentOfThreadCount) {
  auto g = GenerateErdosRenyi(120, 0.1, 9);
  ASSERT_TRUE(g.ok());
  RunOptions four;
  four.jobs = 4;
  RngStream a(9), b(9);
  auto ra = RunMrDense(*g, {100.0, 0.1}, a);
  auto rb = RunMrDense(*g, {100.0, 0.1}, b, four);
  ASSERT_TRUE(ra.ok() && rb.ok());
  ExpectSameRun(*ra, *rb);
}

// Whether a dumped record refers to node u. DENSITY values are degree
// counts, not ids.
bool Mentions(const nlohmann::json& record, int64_t u) {
  if (record[0] == "DENSITY") return false;
  if (record[0].is_number() && record[0] == u) return true;
  const auto& value = record[1];
  if (value.is_number()) return value == u;
  if (value.is_array()) {
    for (const auto& x : value) {
      if (x == u) return true;
    }
  }
  return false;
}

// A node that leaves in phase i emits only its self-edge, is dropped by the
// next neighbourhood reduce and never shows up again.
TEST(MrDenseTest, RemovedNodesDisappear) {
  const Graph g = Layered({120, 24, 5, 1});
  RngStream rng(5);
  std::ostringstream trace;
  auto r = RunMrDense(g, {300.0, 0.1}, rng, {}, &trace);
  ASSERT_TRUE(r.ok());
  ASSERT_GE(r->phases, 3);
  std::vector<nlohmann::json> lines;
  std::istringstream in(trace.str());
  for (std::string line; std::getline(in, line);) {
    lines.push_back(nlohmann::json::parse(line));
  }
  int64_t checked = 0;
  for (const auto& line : lines) {
    if (line["subphase"] != "map_race") continue;
    const int64_t phase = line["phase"];
    std::set<int64_t> gone;
    for (const auto& rec : line["records"]) {
      if (rec[1].is_number() && rec[0] == rec[1])
        gone.insert(rec[0].get<int64_t>());
    }
    for (const auto& later : lines) {
      const bool after =
          later["phase"] >= phase + 2 ||
          (later["phase"] == phase + 1 && later["subphase"] == "map_race");
      if (!after) continue;
      for (const auto& rec : later["records"]) {
        for (int64_t u : gone) {
          EXPECT_FALSE(Mentions(rec, u)) << "node " << u << " phase " << phase;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace dpdense
