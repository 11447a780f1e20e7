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

#include "sgossip/version_vector.h"

#include <algorithm>

namespace sgossip {

namespace {
bool ByNode(const VersionVector::Entry& e, NodeId id) { return e.node < id; }
}  // namespace

VersionVector::VersionVector(std::initializer_list<Entry> entries) {
  for (const Entry& e : entries) set(e.node, e.counter);
}

std::uint64_t VersionVector::get(NodeId node) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), node, ByNode);
  return it != entries_.end() && it->node == node ? it->counter : 0;
}

void VersionVector::set(NodeId node, std::uint64_t counter) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), node, ByNode);
  const bool present = it != entries_.end() && it->node == node;
  if (counter == 0) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->counter = counter;
  } else {
    entries_.insert(it, Entry{node, counter});
  }
}

std::uint64_t VersionVector::increment(NodeId node) {
  const std::uint64_t next = get(node) + 1;
  set(node, next);
  return next;
}

void VersionVector::merge(const VersionVector& other) {
  if (other.entries_.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->node < b->node)) {
      out.push_back(*a++);
    } else if (a == entries_.end() || b->node < a->node) {
      out.push_back(*b++);
    } else {
      out.push_back(Entry{a->node, std::max(a->counter, b->counter)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

bool VersionVector::dominates(const VersionVector& other) const {
  return std::all_of(other.entries_.begin(), other.entries_.end(),
                     [&](const Entry& e) { return get(e.node) >= e.counter; });
}

std::uint64_t VersionVector::max_counter() const {
  std::uint64_t best = 0;
  for (const Entry& e : entries_) best = std::max(best, e.counter);
  return best;
}

}  // namespace sgossip
