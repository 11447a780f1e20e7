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

#include "sgossip/partition_merger.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sgossip {

std::optional<MergeDecision> merger_step(NodeState& node, const NetworkView& view,
                                         std::uint64_t round) {
  std::erase_if(node.cross_partition_links,
                [&](NodeId j) { return !view.reachable(node.id, j); });
  if (node.cross_partition_links.empty()) return std::nullopt;

  node.known_partitions = {node.partition};
  for (NodeId j : node.cross_partition_links) {
    node.known_partitions.insert(view.partition_of(j));
  }
  const PartitionId target = *node.known_partitions.begin();

  std::optional<MergeDecision> decision;
  if (target != node.partition) {
    decision = MergeDecision{node.id, node.partition, target, round};
    node.partition = target;
    ++node.partition_version;
  }
  std::erase_if(node.cross_partition_links,
                [&](NodeId j) { return view.partition_of(j) == node.partition; });
  return decision;
}

std::map<NodeId, PartitionId> assign_fragment_ids(
    std::span<const std::vector<NodeId>> fragments) {
  std::map<NodeId, PartitionId> out;
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    if (fragments[f].empty()) {
      throw std::invalid_argument("fragment " + std::to_string(f) + " is empty");
    }
    const NodeId lowest = *std::min_element(fragments[f].begin(), fragments[f].end());
    for (NodeId id : fragments[f]) {
      if (!out.emplace(id, PartitionId{lowest.value}).second) {
        throw std::invalid_argument("node " + to_string(id) +
                                    " appears in more than one fragment");
      }
    }
  }
  return out;
}

std::vector<std::vector<NodeId>> components(const NetworkView& view) {
  std::map<std::uint64_t, std::vector<NodeId>> by_group;
  for (NodeId id : view.members()) {
    if (view.active(id)) by_group[view.group_of(id)].push_back(id);
  }
  std::vector<std::vector<NodeId>> out;
  for (auto& [group, members] : by_group) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<ComponentStatus> partitions_converged(std::span<const NodeState> states,
                                                  const NetworkView& view) {
  std::vector<ComponentStatus> out;
  for (const auto& members : components(view)) {
    ComponentStatus c;
    c.key = members.front();
    c.size = members.size();
    const NodeSet& membership = view.reachable_from(c.key);
    bool agree = true;
    bool covered = true;
    const PartitionId first = states[*view.index_of(c.key)].partition;
    for (NodeId id : members) {
      const NodeState& s = states[*view.index_of(id)];
      agree = agree && s.partition == first;
      covered = covered && s.known_nodes.includes(membership);
    }
    if (agree) c.partition = first;
    c.converged = agree && covered;
    out.push_back(c);
  }
  return out;
}

}  // namespace sgossip
