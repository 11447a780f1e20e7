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

#ifndef SGOSSIP_PARTITION_MERGER_H_
#define SGOSSIP_PARTITION_MERGER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sgossip/chord_node.h"
#include "sgossip/ids.h"
#include "sgossip/network_view.h"

namespace sgossip {

struct MergeDecision {
  NodeId node;
  PartitionId old_partition;
  PartitionId target_partition;
  std::uint64_t round = 0;

  bool operator==(const MergeDecision&) const = default;
};

// Lowest-partition-wins merger. Cross links to peers that are no longer
// reachable are dropped first. If links remain, known_partitions is rebuilt
// from the node's label and the peers' current labels and the node adopts
// the minimum, bumping partition_version. Links to peers that now share the
// node's label are purged afterwards.
std::optional<MergeDecision> merger_step(NodeState& node, const NetworkView& view,
                                         std::uint64_t round);

// Each fragment is labelled with its smallest member. Throws
// std::invalid_argument on empty or overlapping fragments.
std::map<NodeId, PartitionId> assign_fragment_ids(
    std::span<const std::vector<NodeId>> fragments);

struct ComponentStatus {
  NodeId key;  // smallest member
  std::size_t size = 0;
  bool converged = false;
  std::optional<PartitionId> partition;  // set when all members agree

  bool operator==(const ComponentStatus&) const = default;
};

// One entry per connected component of active nodes (ordered by key). A
// component has converged when its members agree on one partition label and
// each member's known_nodes covers the component. `states` is indexed like
// view.members().
std::vector<ComponentStatus> partitions_converged(std::span<const NodeState> states,
                                                  const NetworkView& view);

// Members of each connected component of active nodes, ordered by key.
std::vector<std::vector<NodeId>> components(const NetworkView& view);

}  // namespace sgossip

#endif  // SGOSSIP_PARTITION_MERGER_H_
