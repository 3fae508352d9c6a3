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

#ifndef DPDENSE_MR_DENSE_H_
#define DPDENSE_MR_DENSE_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "dpdense/graph.h"
#include "dpdense/mechanisms.h"
#include "dpdense/random.h"
#include "dpdense/result.h"

namespace dpdense {

struct MrKey {
  enum class Kind : uint8_t { kNode = 0, kSet = 1, kDensity = 2 };

  Kind kind = Kind::kNode;
  NodeId node = 0;

  static MrKey Node(NodeId v) { return {Kind::kNode, v}; }
  static MrKey Set() { return {Kind::kSet, 0}; }
  static MrKey DensityKey() { return {Kind::kDensity, 0}; }

  friend auto operator<=>(const MrKey&, const MrKey&) = default;
  friend bool operator==(const MrKey&, const MrKey&) = default;
};

// A node id, a degree (sum), or the marker kPresent; or a node list (a
// neighbourhood after the first reduce, the member list after the second).
using MrValue = std::variant<int64_t, std::vector<NodeId>>;
using KVRecord = std::pair<MrKey, MrValue>;

// Emitted by every node that survives a phase, so nodes without live
// neighbours are not lost between phases.
inline constexpr int64_t kPresent = -1;

// The phase-based algorithm as a Map-Reduce job. Each phase runs three
// reduce sub-phases (neighbour lists and removal filtering, set assembly,
// degree sum) and one map sub-phase (race sampling). Draws the same keyed
// substreams as RunPhase, so both produce identical candidates and output
// for equal seeds.
//
// When `trace` is set, every sub-phase's output is written to it as one JSON
// object per line.
absl::StatusOr<DPResult> RunMrDense(const Graph& graph,
                                    const PrivacyParams& params, RngStream& rng,
                                    const RunOptions& options = {},
                                    std::ostream* trace = nullptr);

// The job's initial records: <u, v> and <v, u> per edge, <u, kPresent> per
// node.
std::vector<KVRecord> InitialRecords(const Graph& graph);

}  // namespace dpdense

#endif  // DPDENSE_MR_DENSE_H_
