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

#include "sgossip/network_view.h"

#include <algorithm>
#include <stdexcept>

namespace sgossip {

NetworkView::NetworkView(std::vector<NodeId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("NetworkView: duplicate node id");
  }
  const std::uint64_t limit = members_.empty() ? 0 : members_.back().value + 1;
  index_.assign(limit, -1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    index_[members_[i].value] = static_cast<std::int32_t>(i);
  }
  active_.assign(members_.size(), true);
  group_.assign(members_.size(), 0);
  label_.assign(members_.size(), PartitionId{0});
  Rebuild();
}

std::optional<std::size_t> NetworkView::index_of(NodeId id) const {
  if (id.value >= index_.size() || index_[id.value] < 0) return std::nullopt;
  return static_cast<std::size_t>(index_[id.value]);
}

std::size_t NetworkView::require(NodeId id) const {
  auto i = index_of(id);
  if (!i) throw std::invalid_argument("unknown node " + to_string(id));
  return *i;
}

bool NetworkView::active(NodeId id) const {
  auto i = index_of(id);
  return i && active_[*i];
}

std::uint64_t NetworkView::group_of(NodeId id) const { return group_[require(id)]; }

PartitionId NetworkView::partition_of(NodeId id) const {
  return label_[require(id)];
}

bool NetworkView::reachable(NodeId from, NodeId to) const {
  auto a = index_of(from);
  auto b = index_of(to);
  return a && b && active_[*a] && active_[*b] && group_[*a] == group_[*b];
}

const NodeSet& NetworkView::reachable_from(NodeId from) const {
  auto i = index_of(from);
  if (!i || !active_[*i]) return empty_;
  auto it = reach_masks_.find(group_[*i]);
  return it == reach_masks_.end() ? empty_ : it->second;
}

const NodeSet& NetworkView::labeled(PartitionId p) const {
  auto it = label_masks_.find(p);
  return it == label_masks_.end() ? empty_ : it->second;
}

void NetworkView::set_active(NodeId id, bool active) { active_[require(id)] = active; }

void NetworkView::set_group(NodeId id, std::uint64_t group) {
  group_[require(id)] = group;
}

void NetworkView::set_partition(NodeId id, PartitionId p) { label_[require(id)] = p; }

void NetworkView::Rebuild() {
  reach_masks_.clear();
  label_masks_.clear();
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (active_[i]) reach_masks_[group_[i]].insert(members_[i]);
    label_masks_[label_[i]].insert(members_[i]);
  }
}

}  // namespace sgossip
