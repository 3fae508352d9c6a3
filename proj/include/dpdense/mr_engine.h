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

#ifndef DPDENSE_MR_ENGINE_H_
#define DPDENSE_MR_ENGINE_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "dpdense/parallel.h"

namespace dpdense::mr {

// In-process Map-Reduce over key-value records. Both operations produce the
// same output for any permutation of their input, and for any `jobs`.

template <typename K, typename V>
using Records = std::vector<std::pair<K, V>>;

// Sorts records by (key, value), hands each key group to
// reducer(const K&, std::span<const V>) -> Records<K2, V2>, and concatenates
// the results in key order.
template <typename K, typename V, typename Reducer>
auto ReduceByKey(Records<K, V> records, Reducer&& reducer, int jobs = 1) {
  using Out = std::invoke_result_t<Reducer&, const K&, std::span<const V>>;
  std::sort(records.begin(), records.end());

  std::vector<K> keys;
  std::vector<V> values;
  std::vector<size_t> group_start;
  values.reserve(records.size());
  for (auto& [key, value] : records) {
    if (keys.empty() || !(keys.back() == key)) {
      keys.push_back(key);
      group_start.push_back(values.size());
    }
    values.push_back(std::move(value));
  }
  group_start.push_back(values.size());

  std::vector<Out> partial(keys.size());
  ParallelFor(keys.size(), jobs, [&](size_t g) {
    const std::span<const V> group(values.data() + group_start[g],
                                   group_start[g + 1] - group_start[g]);
    partial[g] = reducer(keys[g], group);
  });

  Out out;
  for (auto& part : partial) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

// Applies mapper(const std::pair<K, V>&) -> Records<K2, V2> to every record
// and returns the union, sorted.
template <typename K, typename V, typename Mapper>
auto Map(const Records<K, V>& records, Mapper&& mapper, int jobs = 1) {
  using Out = std::invoke_result_t<Mapper&, const std::pair<K, V>&>;
  std::vector<Out> partial(records.size());
  ParallelFor(records.size(), jobs,
              [&](size_t i) { partial[i] = mapper(records[i]); });
  Out out;
  for (auto& part : partial) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dpdense::mr

#endif  // DPDENSE_MR_ENGINE_H_
