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

#ifndef DPDENSE_TOOLS_FETCH_H_
#define DPDENSE_TOOLS_FETCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "absl/status/statusor.h"

namespace dpdense {

struct KnownDataset {
  const char* name;
  const char* url;
  int64_t nodes;
  int64_t edges;
};

// SNAP networks with plain edge-list downloads, with their published sizes.
const KnownDataset* FindKnownDataset(const std::string& name);

// $DPDS_CACHE, else $HOME/.cache/dpdense, else ./dpdense-cache.
std::string CacheDirectory();

// Downloads (http, https or file URL), gunzips when needed.
absl::StatusOr<std::string> FetchBytes(const std::string& url);
absl::StatusOr<std::string> MaybeGunzip(std::string bytes);

struct FetchResult {
  std::string path;
  int64_t nodes = 0;
  int64_t edges = 0;
  // Set when an expected (n, m) was given and did not match.
  std::optional<std::string> mismatch;
};

// Fetches `name` into the cache as a canonical edge list with dense ids.
absl::StatusOr<FetchResult> FetchDataset(
    const std::string& name, std::optional<std::string> url,
    std::optional<std::pair<int64_t, int64_t>> expect);

}  // namespace dpdense

#endif  // DPDENSE_TOOLS_FETCH_H_
