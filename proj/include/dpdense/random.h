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

#ifndef DPDENSE_RANDOM_H_
#define DPDENSE_RANDOM_H_

#include <cstdint>
#include <limits>
#include <string_view>

namespace dpdense {

// Deterministic, splittable random stream.
//
// A stream is a 64-bit key plus a draw counter; each draw is the SplitMix64
// finalizer applied to key + counter * golden-gamma. Substreams are derived
// by hashing (label, a, b) into the key, so per-node and per-phase samples can
// be drawn in any order, on any thread, and still agree bit for bit.
class RngStream {
 public:
  using result_type = uint64_t;

  explicit RngStream(uint64_t seed) : seed_(seed), key_(Mix(seed)) {}

  // The seed this stream (or its root) was constructed from.
  uint64_t seed() const { return seed_; }

  RngStream Substream(std::string_view label, uint64_t a = 0,
                      uint64_t b = 0) const;

  uint64_t NextU64() { return Mix(key_ + (++counter_) * kGoldenGamma); }

  // Uniform on the open interval (0, 1); never returns 0 or 1.
  double NextUniform() {
    return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t NextBelow(uint64_t bound);

  // UniformRandomBitGenerator surface.
  static constexpr uint64_t min() { return 0; }
  static constexpr uint64_t max() {
    return std::numeric_limits<uint64_t>::max();
  }
  uint64_t operator()() { return NextU64(); }

  static uint64_t Mix(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

 private:
  static constexpr uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

  RngStream(uint64_t seed, uint64_t key, int) : seed_(seed), key_(key) {}

  uint64_t seed_;
  uint64_t key_;
  uint64_t counter_ = 0;
};

// Mixes several values into one 64-bit seed; used to derive per-trial seeds.
uint64_t CombineSeed(uint64_t master, std::string_view label, uint64_t a,
                     uint64_t b = 0, uint64_t c = 0);

}  // namespace dpdense

#endif  // DPDENSE_RANDOM_H_
