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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "dpdense/baseline.h"
#include "dpdense/graph.h"
#include "dpdense/random.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dpdense {
namespace {

using ::dpdense::testing::MakeGraph;
using ::dpdense::testing::ThreeSigma;
using ::testing::ElementsAre;

TEST(SeqConstantsTest, EpsPrime) {
  const SeqConstants c = SeqConstants::From({1.0, 1e-6});
  EXPECT_DOUBLE_EQ(c.eps_prime, 1.0 / (4.0 * std::log(std::exp(1.0) / 1e-6)));
  EXPECT_LT(c.eps_prime, 1.0);
  EXPECT_DOUBLE_EQ(SeqConstants::From({1.0, 1e-6}, 10.0).eps_prime,
                   10.0 * c.eps_prime);
}

TEST(SeqTest, SingleNode) {
  const Graph g = MakeGraph(1, {});
  RngStream rng(1);
  auto r = RunSeq(g, {1.0, 1e-6}, rng);
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(r->selected.Members(), ElementsAre(0));
  EXPECT_EQ(r->density, 0.0);
  EXPECT_EQ(r->iterations, 1);
  EXPECT_EQ(r->trace.candidates.size(), 1u);
}

TEST(SeqTest, InvalidParams) {
  const Graph g = MakeGraph(2, {{0, 1}});
  RngStream rng(1);
  EXPECT_FALSE(RunSeq(g, {0.0, 1e-6}, rng).ok());
  EXPECT_FALSE(RunSeq(g, {1.0, 1.0}, rng).ok());
}

TEST(SeqTest, DeterministicForSeed) {
  auto g = GenerateErdosRenyi(80, 0.1, 3);
  ASSERT_TRUE(g.ok());
  RngStream a(99), b(99);
  auto ra = RunSeq(*g, {1.0, 1e-6}, a);
  auto rb = RunSeq(*g, {1.0, 1e-6}, b);
  ASSERT_TRUE(ra.ok() && rb.ok());
  EXPECT_EQ(ra->selected, rb->selected);
  EXPECT_EQ(ra->trace.removal_order, rb->trace.removal_order);
  EXPECT_EQ(ra->selected_index, rb->selected_index);
}

TEST(SeqTest, CandidatesAreNestedPrefixes) {
  auto g = GenerateErdosRenyi(40, 0.2, 5);
  ASSERT_TRUE(g.ok());
  RngStream rng(5);
  auto r = RunSeq(*g, {2.0, 1e-6}, rng);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->iterations, 40);
  ASSERT_EQ(r->trace.removal_order.size(), 40u);
  ASSERT_EQ(r->trace.candidates.size(), 40u);
  std::vector<NodeId> sorted = r->trace.removal_order;
  std::sort(sorted.begin(), sorted.end());
  for (NodeId v = 0; v < 40; ++v) EXPECT_EQ(sorted[v], v);
  for (size_t t = 0; t < 40; ++t) {
    const Candidate& c = r->trace.candidates[t];
    EXPECT_EQ(c.removed, t);
    EXPECT_EQ(c.size, 40 - static_cast<int64_t>(t));
    EXPECT_DOUBLE_EQ(c.density, Density(*g, r->trace.Materialize(t)));
  }
  EXPECT_EQ(r->selected, r->trace.Materialize(r->selected_index));
  EXPECT_DOUBLE_EQ(r->density, Density(*g, r->selected));
}

// First-removal frequencies against softmax over -eps' * degree.
TEST(SeqTest, FirstRemovalMatchesSoftmax) {
  const Graph g = MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  const PrivacyParams params{8.0, 1e-3};
  const double eps_prime = SeqConstants::From(params).eps_prime;
  std::vector<double> weight(4);
  double z = 0.0;
  for (NodeId v = 0; v < 4; ++v) {
    weight[v] = std::exp(-eps_prime * static_cast<double>(g.degree(v)));
    z += weight[v];
  }
  const int64_t n = 40000;
  std::vector<int64_t> counts(4, 0);
  for (int64_t i = 0; i < n; ++i) {
    RngStream rng(i);
    ++counts[RunSeq(g, params, rng)->trace.removal_order[0]];
  }
  for (NodeId v = 0; v < 4; ++v) {
    const double p = weight[v] / z;
    EXPECT_NEAR(counts[v], p * n, ThreeSigma(p, n)) << v;
  }
}

// Independent model of the mechanism on K_k plus isolated nodes: only the
// number of clique nodes left matters, and one step removes a clique node
// with probability k exp(-eps' (k-1)) / (k exp(-eps' (k-1)) + isolated).
double OracleSeqPlanted(int clique, int isolated, double eps, double delta,
                        std::mt19937_64& gen) {
  const double eps_prime = eps / (4 * std::log(std::exp(1.0) / delta));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> densities;
  int k = clique, i = isolated;
  while (k + i > 0) {
    densities.push_back(k * (k - 1) / 2.0 / (k + i));
    const double wc = k * std::exp(-eps_prime * (k - 1));
    if (unif(gen) * (wc + i) < wc) {
      --k;
    } else {
      --i;
    }
  }
  double best = -1e300, chosen = 0;
  for (double d : densities) {
    const double score = eps / 2 * d - std::log(-std::log(unif(gen)));
    if (score > best) best = score, chosen = d;
  }
  return chosen;
}

// K_20 in 100 nodes at eps=8: the share of runs reaching half the optimum
// and the mean density agree with the model.
TEST(SeqTest, PlantedCliqueMatchesCountModel) {
  auto g = GeneratePlanted(100, 20, 0.0, 1);
  ASSERT_TRUE(g.ok());
  const PrivacyParams params{8.0, 1e-6};
  const int runs = 400, oracle_runs = 8000;
  double hits = 0, sum = 0, sq = 0;
  for (int t = 0; t < runs; ++t) {
    RngStream rng(t);
    auto r = RunSeq(*g, params, rng);
    ASSERT_TRUE(r.ok());
    hits += r->density >= 4.75;
    sum += r->density;
    sq += r->density * r->density;
  }
  std::mt19937_64 gen(12345);
  double ohits = 0, osum = 0;
  for (int t = 0; t < oracle_runs; ++t) {
    const double d = OracleSeqPlanted(20, 80, 8.0, 1e-6, gen);
    ohits += d >= 4.75;
    osum += d;
  }
  const double p = ohits / oracle_runs;
  EXPECT_NEAR(hits / runs, p,
              4 * std::sqrt(p * (1 - p) * (1.0 / runs + 1.0 / oracle_runs)));
  const double mean = sum / runs;
  const double sd = std::sqrt(sq / runs - mean * mean);
  EXPECT_NEAR(mean, osum / oracle_runs, 4 * sd / std::sqrt(runs));
  // Far from a coin flip either way.
  EXPECT_GT(hits / runs, 0.6);
}

TEST(SeqTest, AccuracyFloorPerTrial) {
  auto g = GenerateErdosRenyi(120, 0.15, 12);
  ASSERT_TRUE(g.ok());
  const double base = CharikarPeel(*g).density;
  for (double eps : {0.5, 1.0, 4.0}) {
    const double delta = 1e-6;
    const double floor =
        base / 2 - 32 / eps * std::log(1 / delta) * std::log(120.0);
    for (uint64_t trial = 0; trial < 5; ++trial) {
      RngStream rng(trial);
      auto r = RunSeq(*g, {eps, delta}, rng);
      ASSERT_TRUE(r.ok());
      EXPECT_GE(r->density, floor);
    }
  }
}

}  // namespace
}  // namespace dpdense
