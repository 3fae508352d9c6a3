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

#include "dpdense/audit.h"

#include "dpdense/graph.h"
#include "dpdense/random.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dpdense {
namespace {

using ::dpdense::testing::MakeGraph;

Graph Path4() { return MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}}); }

TEST(AuditTest, LargeEpsilonPassesTrivially) {
  for (Algorithm a : {Algorithm::kSeq, Algorithm::kPar, Algorithm::kPhase}) {
    AuditConfig config;
    config.algorithm = a;
    config.params = {50.0, 0.05};
    config.edge = {0, 2};
    config.samples = kAuditMinSamples;
    auto report = AuditPrivacy(Path4(), config, RngStream(1));
    ASSERT_TRUE(report.ok()) << report.status();
    EXPECT_TRUE(report->passed);
    EXPECT_EQ(report->rows.size(), 16u);
  }
}

TEST(AuditTest, CountsAddUp) {
  AuditConfig config;
  config.samples = kAuditMinSamples;
  config.edge = {0, 2};
  auto report = AuditPrivacy(Path4(), config, RngStream(2));
  ASSERT_TRUE(report.ok());
  int64_t g = 0, n = 0;
  for (const AuditRow& row : report->rows) {
    g += row.count_g;
    n += row.count_neighbour;
    EXPECT_GE(row.margin_forward, row.adjusted_forward);
  }
  EXPECT_EQ(g, config.samples);
  EXPECT_EQ(n, config.samples);
  // The empty set is never an output.
  EXPECT_EQ(report->rows[0].count_g, 0);
}

TEST(AuditTest, IndependentOfThreadCount) {
  AuditConfig config;
  config.samples = kAuditMinSamples;
  config.algorithm = Algorithm::kPar;
  auto one = AuditPrivacy(Path4(), config, RngStream(3));
  config.jobs = 3;
  auto three = AuditPrivacy(Path4(), config, RngStream(3));
  ASSERT_TRUE(one.ok() && three.ok());
  for (size_t i = 0; i < one->rows.size(); ++i) {
    EXPECT_EQ(one->rows[i].count_g, three->rows[i].count_g);
    EXPECT_EQ(one->rows[i].count_neighbour, three->rows[i].count_neighbour);
  }
}

// With eps' inflated 100x, the removal step nearly always takes the
// isolated nodes first when G has the single edge (0, 1), so {0, 1} is far
// likelier on G than on the edgeless neighbour.
TEST(AuditTest, DetectsBrokenMechanism) {
  AuditConfig config;
  config.algorithm = Algorithm::kSeq;
  config.params = {1.0, 0.05};
  config.edge = {0, 1};
  config.samples = 200'000;
  config.run_options.eps_prime_multiplier = 100.0;
  auto report = AuditPrivacy(MakeGraph(4, {{0, 1}}), config, RngStream(4));
  ASSERT_TRUE(report.ok());
  EXPECT_FALSE(report->passed);
  EXPECT_GT(report->max_adjusted_margin, 0.05);
}

TEST(AuditTest, Guards) {
  AuditConfig config;
  config.samples = kAuditMinSamples;
  const Graph six = MakeGraph(6, {{0, 1}});
  EXPECT_EQ(AuditPrivacy(six, config, RngStream(1)).status().code(),
            absl::StatusCode::kInvalidArgument);
  config.samples = kAuditMinSamples - 1;
  EXPECT_EQ(AuditPrivacy(Path4(), config, RngStream(1)).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(AuditTest, JsonReport) {
  AuditConfig config;
  config.samples = kAuditMinSamples;
  auto report = AuditPrivacy(Path4(), config, RngStream(5));
  ASSERT_TRUE(report.ok());
  const auto j = report->ToJson();
  EXPECT_EQ(j["algorithm"], "seq");
  EXPECT_EQ(j["events"].size(), 16u);
  EXPECT_EQ(j["passed"], report->passed);
}

}  // namespace
}  // namespace dpdense
