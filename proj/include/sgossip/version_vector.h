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

#ifndef SGOSSIP_VERSION_VECTOR_H_
#define SGOSSIP_VERSION_VECTOR_H_

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "sgossip/ids.h"

namespace sgossip {

// Map NodeId -> update counter. Absent entries read as 0 and zero entries
// are never stored, so {a:0} and {} compare equal.
class VersionVector {
 public:
  struct Entry {
    NodeId node;
    std::uint64_t counter;
    bool operator==(const Entry&) const = default;
  };

  VersionVector() = default;
  VersionVector(std::initializer_list<Entry> entries);

  std::uint64_t get(NodeId node) const;

  // Raw assignment; the protocol itself only uses increment() and merge().
  void set(NodeId node, std::uint64_t counter);

  std::uint64_t increment(NodeId node);

  // Element-wise max.
  void merge(const VersionVector& other);

  // True iff every entry of `other` is <= the matching entry here.
  bool dominates(const VersionVector& other) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::uint64_t max_counter() const;

  friend bool operator==(const VersionVector&, const VersionVector&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by node, counters > 0
};

}  // namespace sgossip

#endif  // SGOSSIP_VERSION_VECTOR_H_
