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

#include "dpdense/random.h"

#include <cstdint>
#include <string_view>

namespace dpdense {
namespace {

uint64_t HashLabel(std::string_view label) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

RngStream RngStream::Substream(std::string_view label, uint64_t a,
                               uint64_t b) const {
  uint64_t k = Mix(key_ ^ HashLabel(label));
  k = Mix(k + a * 0xd6e8feb86659fd93ULL + 1);
  k = Mix(k + b * 0xa0761d6478bd642fULL + 2);
  return RngStream(seed_, k, 0);
}

uint64_t RngStream::NextBelow(uint64_t bound) {
  // Lemire's multiply-shift with rejection.
  uint64_t x = NextU64();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < bound) {
    const uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = NextU64();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

uint64_t CombineSeed(uint64_t master, std::string_view label, uint64_t a,
                     uint64_t b, uint64_t c) {
  uint64_t k = RngStream::Mix(master ^ HashLabel(label));
  k = RngStream::Mix(k ^ a);
  k = RngStream::Mix(k ^ (b + 0x9e3779b97f4a7c15ULL));
  k = RngStream::Mix(k ^ (c + 0x3c6ef372fe94f82aULL));
  return k;
}

}  // namespace dpdense
