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

#ifndef DPDENSE_ALGORITHM_H_
#define DPDENSE_ALGORITHM_H_

#include <string_view>

#include "absl/status/statusor.h"
#include "dpdense/graph.h"
#include "dpdense/mechanisms.h"
#include "dpdense/random.h"
#include "dpdense/result.h"

namespace dpdense {

enum class Algorithm { kSeq, kPar, kPhase, kMr, kBaseline };

absl::StatusOr<Algorithm> ParseAlgorithm(std::string_view name);
std::string_view AlgorithmName(Algorithm algorithm);
bool IsPrivate(Algorithm algorithm);

// Runs one algorithm. The baseline ignores params and rng; its result has a
// single candidate.
absl::StatusOr<DPResult> RunAlgorithm(Algorithm algorithm, const Graph& graph,
                                      const PrivacyParams& params,
                                      RngStream& rng,
                                      const RunOptions& options = {});

}  // namespace dpdense

#endif  // DPDENSE_ALGORITHM_H_
