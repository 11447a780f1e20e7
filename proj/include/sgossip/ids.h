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

#ifndef SGOSSIP_IDS_H_
#define SGOSSIP_IDS_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace sgossip {

/// Position on the 2^m identifier ring.
struct NodeId {
  std::uint64_t value = 0;

  constexpr auto operator<=>(const NodeId&) const = default;
};

/// Ordered label of a connected fragment. Mergers adopt the minimum.
struct PartitionId {
  std::uint64_t value = 0;

  constexpr auto operator<=>(const PartitionId&) const = default;
};

inline constexpr int kMaxRingBits = 20;

struct RingConfig {
  int m = 16;
  std::uint64_t seed = 0;

  std::uint64_t ring_size() const { return std::uint64_t{1} << m; }
  std::uint64_t mask() const { return ring_size() - 1; }

  // Throws std::invalid_argument unless 1 <= m <= kMaxRingBits.
  void Validate() const;
};

/// (b - a) mod 2^m.
std::uint64_t clockwise_distance(NodeId a, NodeId b, const RingConfig& cfg);

/// True iff x lies in the clockwise interval (open_lo, closed_hi]. When
/// open_lo == closed_hi the interval is the whole ring.
bool in_interval(NodeId x, NodeId open_lo, NodeId closed_hi,
                 const RingConfig& cfg);

/// FNV-1a over the bytes, finished with the murmur3 64-bit mixer, keeping the
/// top m bits. Throws std::invalid_argument for an empty name.
NodeId hash_name(std::string_view name, const RingConfig& cfg);

/// Smallest m such that 2^m >= n (at least 1).
int bits_for(std::uint64_t n);

inline std::string to_string(NodeId id) { return std::to_string(id.value); }
inline std::string to_string(PartitionId p) { return std::to_string(p.value); }

}  // namespace sgossip

template <>
struct std::hash<sgossip::NodeId> {
  std::size_t operator()(sgossip::NodeId id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};

#endif  // SGOSSIP_IDS_H_
