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

#include "sgossip/gossip.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sgossip {

std::vector<NodeId> GossipTargets::distinct() const {
  std::vector<NodeId> out;
  if (successor_target) out.push_back(*successor_target);
  if (finger_target && finger_target != successor_target) {
    out.push_back(*finger_target);
  }
  return out;
}

std::string_view to_string(FingerPolicy policy) {
  return policy == FingerPolicy::kRotating ? "rotating" : "furthest";
}

FingerPolicy parse_finger_policy(std::string_view text) {
  if (text == "rotating") return FingerPolicy::kRotating;
  if (text == "furthest") return FingerPolicy::kFurthest;
  throw std::invalid_argument("unknown finger policy '" + std::string(text) +
                              "' (expected rotating or furthest)");
}

namespace {

bool same_partition_peer(const NodeState& node, NodeId peer,
                         const NetworkView& view) {
  return peer != node.id && view.reachable(node.id, peer) &&
         view.partition_of(peer) == node.partition;
}

}  // namespace

GossipTargets select_targets(const NodeState& node, const NetworkView& view,
                             const RingConfig& cfg, FingerPolicy policy,
                             std::uint64_t round) {
  GossipTargets t;
  if (!view.active(node.id)) return t;
  if (same_partition_peer(node, node.successor, view)) {
    t.successor_target = node.successor;
  }

  std::vector<NodeId> fingers;
  for (const FingerEntry& f : node.fingers) {
    if (f.target && same_partition_peer(node, *f.target, view)) {
      fingers.push_back(*f.target);
    }
  }
  if (fingers.empty()) return t;
  // Furthest first; equal distances (same target) break toward the smaller id.
  std::sort(fingers.begin(), fingers.end(), [&](NodeId a, NodeId b) {
    const auto da = clockwise_distance(node.id, a, cfg);
    const auto db = clockwise_distance(node.id, b, cfg);
    return da != db ? da > db : a < b;
  });
  fingers.erase(std::unique(fingers.begin(), fingers.end()), fingers.end());

  const std::size_t pick =
      policy == FingerPolicy::kRotating ? round % fingers.size() : 0;
  t.finger_target = fingers[pick];
  return t;
}

GossipMessage make_message(const NodeState& node) {
  return GossipMessage{node.id, node.known_nodes, node.vv, node.partition,
                       node.partition_version};
}

void detect_cross_partition(NodeState& node, const NetworkView& view) {
  for (NodeId k : structure_links(node)) {
    if (!view.reachable(node.id, k)) continue;
    const PartitionId other = view.partition_of(k);
    if (other != node.partition) {
      node.cross_partition_links.insert(k);
      node.known_partitions.insert(other);
    }
  }
}

void receive_gossip(NodeState& node, const GossipMessage& msg,
                    const NetworkView& view, std::uint64_t round) {
  if (msg.partition == node.partition) {
    node.known_nodes.merge_masked(msg.known_nodes, view.labeled(node.partition));
    node.vv.merge(msg.vv);
  } else {
    node.cross_partition_links.insert(msg.sender);
    node.known_partitions.insert(msg.partition);
  }
  node.last_update = round;
}

}  // namespace sgossip
