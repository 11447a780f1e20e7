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

#include "sgossip/fault_model.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sgossip/partition_merger.h"

namespace sgossip {

FaultModel::FaultModel(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (members_.empty()) throw std::invalid_argument("network has no nodes");
  active_.assign(members_.size(), true);
  group_.assign(members_.size(), members_.front().value);
}

bool FaultModel::is_member(NodeId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

std::size_t FaultModel::require(NodeId id) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it == members_.end() || *it != id) {
    throw std::invalid_argument("unknown node " + to_string(id));
  }
  return static_cast<std::size_t>(it - members_.begin());
}

bool FaultModel::active(NodeId id) const { return active_[require(id)]; }

std::uint64_t FaultModel::group_of(NodeId id) const { return group_[require(id)]; }

std::set<std::uint64_t> FaultModel::groups() const {
  return {group_.begin(), group_.end()};
}

std::vector<PartitionId> FaultModel::split(
    const std::vector<std::vector<NodeId>>& fragments) {
  if (fragments.empty()) throw std::invalid_argument("split needs at least one fragment");
  for (const auto& f : fragments) {
    for (NodeId id : f) require(id);
  }
  const auto ids = assign_fragment_ids(fragments);
  if (ids.size() != members_.size()) {
    throw std::invalid_argument("fragments cover " + std::to_string(ids.size()) +
                                " of " + std::to_string(members_.size()) + " nodes");
  }
  std::vector<PartitionId> out;
  for (const auto& f : fragments) out.push_back(ids.at(f.front()));
  for (const auto& [node, p] : ids) group_[require(node)] = p.value;
  return out;
}

std::uint64_t FaultModel::heal(const std::vector<PartitionId>& partitions) {
  if (partitions.empty()) return heal_all();
  const std::set<std::uint64_t> existing = groups();
  std::set<std::uint64_t> chosen;
  for (PartitionId p : partitions) {
    if (!existing.contains(p.value)) {
      throw std::invalid_argument("no partition " + to_string(p) + " to heal");
    }
    chosen.insert(p.value);
  }
  if (chosen.size() < 2) {
    throw std::invalid_argument("heal needs at least two distinct partitions");
  }
  const std::uint64_t survivor = *chosen.begin();
  for (auto& g : group_) {
    if (chosen.contains(g)) g = survivor;
  }
  return survivor;
}

std::uint64_t FaultModel::heal_all() {
  const std::set<std::uint64_t> existing = groups();
  if (existing.size() < 2) throw std::invalid_argument("network is not partitioned");
  std::fill(group_.begin(), group_.end(), *existing.begin());
  return *existing.begin();
}

void FaultModel::kill(NodeId id) {
  const std::size_t i = require(id);
  if (!active_[i]) throw std::invalid_argument("node " + to_string(id) + " is already down");
  active_[i] = false;
}

void FaultModel::revive(NodeId id) {
  const std::size_t i = require(id);
  if (active_[i]) throw std::invalid_argument("node " + to_string(id) + " is already up");
  active_[i] = true;
}

}  // namespace sgossip
