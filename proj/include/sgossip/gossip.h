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

#ifndef SGOSSIP_GOSSIP_H_
#define SGOSSIP_GOSSIP_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sgossip/chord_node.h"
#include "sgossip/ids.h"
#include "sgossip/network_view.h"
#include "sgossip/node_set.h"
#include "sgossip/version_vector.h"

namespace sgossip {

// Snapshot of the sender's knowledge, copied at send time.
struct GossipMessage {
  NodeId sender;
  NodeSet known_nodes;
  VersionVector vv;
  PartitionId partition;
  std::uint64_t partition_version = 0;

  bool operator==(const GossipMessage&) const = default;
};

struct GossipTargets {
  std::optional<NodeId> successor_target;
  std::optional<NodeId> finger_target;

  // Distinct targets in send order; a finger equal to the successor is sent
  // once.
  std::vector<NodeId> distinct() const;
};

// How the finger half of a gossip round is chosen.
//
// kFurthest always picks the same-partition finger with the largest
// clockwise distance. kRotating walks the distinct same-partition finger
// targets from furthest to nearest, one per round, so consecutive rounds
// cover every exponential distance; in round 0 (mod the finger count) it
// coincides with kFurthest.
enum class FingerPolicy { kRotating, kFurthest };

std::string_view to_string(FingerPolicy policy);
FingerPolicy parse_finger_policy(std::string_view text);

// Targets must be active, reachable and carry the sender's partition label.
GossipTargets select_targets(const NodeState& node, const NetworkView& view,
                             const RingConfig& cfg,
                             FingerPolicy policy = FingerPolicy::kFurthest,
                             std::uint64_t round = 0);

GossipMessage make_message(const NodeState& node);

// Records every reachable structure link whose partition label differs from
// the node's own, together with that label.
void detect_cross_partition(NodeState& node, const NetworkView& view);

// Same partition: union in the sender's known nodes that currently carry our
// label, and max-merge version vectors. Different partition: remember the
// sender as a cross-partition link. Either way last_update = round.
void receive_gossip(NodeState& node, const GossipMessage& msg,
                    const NetworkView& view, std::uint64_t round);

}  // namespace sgossip

#endif  // SGOSSIP_GOSSIP_H_
