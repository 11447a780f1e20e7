// Copyright 2026 The sgossip Authors
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

#include "sgossip/ids.h"

#include <stdexcept>

namespace sgossip {

void RingConfig::Validate() const {
  if (m < 1 || m > kMaxRingBits) {
    throw std::invalid_argument("ring bit width m must be in [1, " +
                                std::to_string(kMaxRingBits) + "], got " +
                                std::to_string(m));
  }
}

std::uint64_t clockwise_distance(NodeId a, NodeId b, const RingConfig& cfg) {
  return (b.value - a.value) & cfg.mask();
}

bool in_interval(NodeId x, NodeId open_lo, NodeId closed_hi,
                 const RingConfig& cfg) {
  const std::uint64_t span = clockwise_distance(open_lo, closed_hi, cfg);
  if (span == 0) return true;
  const std::uint64_t dx = clockwise_distance(open_lo, x, cfg);
  return dx != 0 && dx <= span;
}

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

std::uint64_t fmix64(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdull;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ull;
  k ^= k >> 33;
  return k;
}

}  // namespace

NodeId hash_name(std::string_view name, const RingConfig& cfg) {
  if (name.empty()) throw std::invalid_argument("hash_name: empty name");
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : name) {
    h ^= c;
    h *= kFnvPrime;
  }
  return NodeId{fmix64(h) >> (64 - cfg.m)};
}

int bits_for(std::uint64_t n) {
  int m = 1;
  while ((std::uint64_t{1} << m) < n) ++m;
  return m;
}

}  // namespace sgossip
