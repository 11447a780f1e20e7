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

#include "sgossip/node_set.h"

#include <algorithm>
#include <stdexcept>

namespace sgossip {

namespace {
constexpr std::uint64_t kMaxId = std::uint64_t{1} << kMaxRingBits;
}  // namespace

NodeSet::NodeSet(std::initializer_list<NodeId> ids) {
  for (NodeId id : ids) insert(id);
}

void NodeSet::insert(NodeId id) {
  if (id.value >= kMaxId) throw std::out_of_range("NodeSet: id out of range");
  const std::size_t w = id.value / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (id.value % 64);
}

void NodeSet::erase(NodeId id) {
  const std::size_t w = id.value / 64;
  if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (id.value % 64));
}

bool NodeSet::contains(NodeId id) const {
  const std::size_t w = id.value / 64;
  return w < words_.size() && ((words_[w] >> (id.value % 64)) & 1u) != 0;
}

std::size_t NodeSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool NodeSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

NodeSet& NodeSet::operator|=(const NodeSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

void NodeSet::merge_masked(const NodeSet& src, const NodeSet& mask) {
  const std::size_t n = std::min(src.words_.size(), mask.words_.size());
  if (n > words_.size()) words_.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) words_[i] |= src.words_[i] & mask.words_[i];
}

bool NodeSet::includes(const NodeSet& other) const {
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    const std::uint64_t mine = i < words_.size() ? words_[i] : 0;
    if ((other.words_[i] & ~mine) != 0) return false;
  }
  return true;
}

std::optional<NodeId> NodeSet::find_next(std::uint64_t from) const {
  std::size_t w = from / 64;
  if (w >= words_.size()) return std::nullopt;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (bits != 0) return NodeId{w * 64 + std::countr_zero(bits)};
    if (++w >= words_.size()) return std::nullopt;
    bits = words_[w];
  }
}

std::optional<NodeId> NodeSet::find_prev(std::uint64_t from) const {
  if (words_.empty()) return std::nullopt;
  std::size_t w = from / 64;
  std::uint64_t bits;
  if (w >= words_.size()) {
    w = words_.size() - 1;
    bits = words_[w];
  } else {
    const unsigned shift = 63 - static_cast<unsigned>(from % 64);
    bits = words_[w] & (~std::uint64_t{0} >> shift);
  }
  while (true) {
    if (bits != 0) return NodeId{w * 64 + 63 - std::countl_zero(bits)};
    if (w == 0) return std::nullopt;
    bits = words_[--w];
  }
}

std::optional<NodeId> NodeSet::next_at_or_after(NodeId from,
                                                std::uint64_t ring_size) const {
  if (auto hit = find_next(from.value)) return hit;
  if (auto wrapped = find_next(0); wrapped && wrapped->value < ring_size) {
    return wrapped;
  }
  return std::nullopt;
}

std::optional<NodeId> NodeSet::prev_at_or_before(NodeId from,
                                                 std::uint64_t ring_size) const {
  if (auto hit = find_prev(from.value)) return hit;
  return find_prev(ring_size - 1);
}

std::optional<NodeId> NodeSet::min() const { return find_next(0); }

std::vector<NodeId> NodeSet::to_vector() const {
  std::vector<NodeId> out;
  out.reserve(size());
  for_each([&](NodeId id) { out.push_back(id); });
  return out;
}

bool operator==(const NodeSet& a, const NodeSet& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t x = i < a.words_.size() ? a.words_[i] : 0;
    const std::uint64_t y = i < b.words_.size() ? b.words_[i] : 0;
    if (x != y) return false;
  }
  return true;
}

}  // namespace sgossip
