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

#include "sgossip/chord_node.h"

#include <algorithm>
#include <stdexcept>

namespace sgossip {

namespace {

NodeSet reachable_known(const NodeState& node, const NetworkView& view) {
  NodeSet candidates = node.known_nodes;
  candidates &= view.reachable_from(node.id);
  return candidates;
}

NodeId add(NodeId id, std::uint64_t delta, const RingConfig& cfg) {
  return NodeId{(id.value + delta) & cfg.mask()};
}

}  // namespace

std::vector<NodeId> structure_links(const NodeState& node) {
  std::vector<NodeId> links;
  links.reserve(node.fingers.size() + 2);
  links.push_back(node.successor);
  if (node.predecessor) links.push_back(*node.predecessor);
  for (const FingerEntry& f : node.fingers) {
    if (f.target) links.push_back(*f.target);
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  std::erase(links, node.id);
  return links;
}

NodeId responsible_node(NodeId key, std::span<const NodeId> members) {
  if (members.empty()) {
    throw std::invalid_argument("responsible_node: empty member set");
  }
  std::optional<NodeId> at_or_after;
  NodeId smallest = members.front();
  for (NodeId m : members) {
    smallest = std::min(smallest, m);
    if (m >= key && (!at_or_after || m < *at_or_after)) at_or_after = m;
  }
  return at_or_after.value_or(smallest);
}

NodeState build_initial_state(NodeId id, std::span<const NodeId> all_nodes,
                              const RingConfig& cfg) {
  if (all_nodes.empty()) {
    throw std::invalid_argument("build_initial_state: empty node list");
  }
  if (!std::is_sorted(all_nodes.begin(), all_nodes.end()) ||
      std::adjacent_find(all_nodes.begin(), all_nodes.end()) != all_nodes.end()) {
    throw std::invalid_argument("build_initial_state: nodes must be sorted and unique");
  }
  auto pos = std::lower_bound(all_nodes.begin(), all_nodes.end(), id);
  if (pos == all_nodes.end() || *pos != id) {
    throw std::invalid_argument("build_initial_state: node " + to_string(id) +
                                " is not a member");
  }
  NodeState s;
  s.id = id;
  s.successor = std::next(pos) == all_nodes.end() ? all_nodes.front() : *std::next(pos);
  s.predecessor = pos == all_nodes.begin() ? all_nodes.back() : *std::prev(pos);
  s.known_nodes.insert(id);
  s.known_nodes.insert(s.successor);
  s.known_nodes.insert(*s.predecessor);
  for (int k = 0; k < cfg.m; ++k) {
    const NodeId start = add(id, std::uint64_t{1} << k, cfg);
    auto at = std::lower_bound(all_nodes.begin(), all_nodes.end(), start);
    const NodeId target = at == all_nodes.end() ? all_nodes.front() : *at;
    s.fingers.push_back(FingerEntry{k, start, target});
    s.known_nodes.insert(target);
  }
  s.partition = PartitionId{0};
  s.known_partitions.insert(s.partition);
  return s;
}

LinkStatus stabilize(NodeState& node, const NetworkView& view,
                     const RingConfig& cfg) {
  const NodeSet candidates = reachable_known(node, view);
  const auto next = candidates.next_at_or_after(add(node.id, 1, cfg), cfg.ring_size());
  if (!next || *next == node.id) {
    node.successor = node.id;
    node.predecessor = node.id;
    return LinkStatus::kIsolated;
  }
  node.successor = *next;
  node.predecessor =
      candidates.prev_at_or_before(add(node.id, cfg.mask(), cfg), cfg.ring_size());
  return LinkStatus::kOk;
}

void repair_fingers(NodeState& node, const NetworkView& view,
                    const RingConfig& cfg) {
  NodeSet candidates = reachable_known(node, view);
  if (view.active(node.id)) candidates.insert(node.id);
  if (node.fingers.size() != static_cast<std::size_t>(cfg.m)) {
    node.fingers.assign(cfg.m, FingerEntry{});
  }
  for (int k = 0; k < cfg.m; ++k) {
    FingerEntry& f = node.fingers[k];
    f.level = k;
    f.start = add(node.id, std::uint64_t{1} << k, cfg);
    f.target = candidates.next_at_or_after(f.start, cfg.ring_size());
  }
}

}  // namespace sgossip
