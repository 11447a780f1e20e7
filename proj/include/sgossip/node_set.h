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

#ifndef SGOSSIP_NODE_SET_H_
#define SGOSSIP_NODE_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "sgossip/ids.h"

namespace sgossip {

// Set of node identifiers stored as a bitset over the identifier space. Grows
// on demand, so memory is proportional to the largest member, not to the
// member count. Identifiers are bounded by 2^kMaxRingBits.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<NodeId> ids);

  void insert(NodeId id);
  void erase(NodeId id);
  bool contains(NodeId id) const;

  std::size_t size() const;
  bool empty() const;
  void clear() { words_.clear(); }

  NodeSet& operator|=(const NodeSet& other);
  NodeSet& operator&=(const NodeSet& other);

  // this |= (src & mask)
  void merge_masked(const NodeSet& src, const NodeSet& mask);

  bool includes(const NodeSet& other) const;

  // First member at or clockwise after `from`, wrapping at ring_size.
  std::optional<NodeId> next_at_or_after(NodeId from,
                                         std::uint64_t ring_size) const;
  // First member at or counter-clockwise before `from`, wrapping.
  std::optional<NodeId> prev_at_or_before(NodeId from,
                                          std::uint64_t ring_size) const;

  std::optional<NodeId> min() const;

  std::vector<NodeId> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(NodeId{w * 64 + static_cast<std::uint64_t>(b)});
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const NodeSet& a, const NodeSet& b);

 private:
  std::optional<NodeId> find_next(std::uint64_t from) const;
  std::optional<NodeId> find_prev(std::uint64_t from) const;

  std::vector<std::uint64_t> words_;
};

}  // namespace sgossip

#endif  // SGOSSIP_NODE_SET_H_
