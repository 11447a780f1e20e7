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

#ifndef SGOSSIP_CHORD_NODE_H_
#define SGOSSIP_CHORD_NODE_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "sgossip/dns_record.h"
#include "sgossip/ids.h"
#include "sgossip/network_view.h"
#include "sgossip/node_set.h"
#include "sgossip/version_vector.h"

namespace sgossip {

// Finger k points at the node believed responsible for id + 2^k. An empty
// target is the INVALID marker and is never used for routing or gossip.
struct FingerEntry {
  int level = 0;
  NodeId start;
  std::optional<NodeId> target;

  bool valid() const { return target.has_value(); }
  bool operator==(const FingerEntry&) const = default;
};

enum class LinkStatus { kOk, kIsolated };

// Complete protocol state of one node.
//
// Hard state: `vv` and `dns_records`. Soft state: `successor`, `predecessor`
// and `fingers`, rebuilt from `known_nodes` every round. Partition state:
// `partition`, `partition_version`, `known_partitions` and
// `cross_partition_links`.
struct NodeState {
  NodeId id;
  NodeId successor;
  std::optional<NodeId> predecessor;
  std::vector<FingerEntry> fingers;
  VersionVector vv;
  NodeSet known_nodes;
  PartitionId partition;
  std::uint64_t partition_version = 0;
  std::set<PartitionId> known_partitions;
  std::set<NodeId> cross_partition_links;
  std::uint64_t last_update = 0;
  RecordTable dns_records;
  bool active = true;

  bool operator==(const NodeState&) const = default;
};

// Successor, predecessor and every valid finger target, deduplicated, self
// excluded.
std::vector<NodeId> structure_links(const NodeState& node);

// Fresh CHORD state for `id` in a fully connected ring of `all_nodes`
// (sorted ascending, unique). Throws std::invalid_argument if `id` is not a
// member.
NodeState build_initial_state(NodeId id, std::span<const NodeId> all_nodes,
                              const RingConfig& cfg);

// First member clockwise from `key`, inclusive. Throws on empty `members`.
NodeId responsible_node(NodeId key, std::span<const NodeId> members);

// Passive successor/predecessor repair: both become the nearest reachable
// member of known_nodes in their direction. No acknowledgement is awaited.
// Isolated nodes point at themselves.
LinkStatus stabilize(NodeState& node, const NetworkView& view,
                     const RingConfig& cfg);

// Finger k becomes the reachable known node nearest clockwise from
// id + 2^k (the node itself included, so a singleton points at itself).
// Entries are INVALID only when the node has no reachable candidates.
void repair_fingers(NodeState& node, const NetworkView& view,
                    const RingConfig& cfg);

}  // namespace sgossip

#endif  // SGOSSIP_CHORD_NODE_H_
