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

#ifndef SGOSSIP_DNS_H_
#define SGOSSIP_DNS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgossip/chord_node.h"
#include "sgossip/dns_record.h"
#include "sgossip/ids.h"
#include "sgossip/network_view.h"

namespace sgossip {

enum class LookupOutcome { kFound, kNotFound, kUnreachable };

std::string_view to_string(LookupOutcome outcome);

struct LookupResult {
  LookupOutcome outcome = LookupOutcome::kUnreachable;
  std::optional<DnsRecord> record;
  std::size_t hops = 0;  // path.size() - 1
  std::vector<NodeId> path;
  // The terminal node is the responsible node of the whole live network, not
  // only of the origin's partition.
  bool authoritative = false;
};

struct Route {
  bool reached = false;
  std::vector<NodeId> path;

  NodeId terminal() const { return path.back(); }
};

// Greedy CHORD routing from `origin` towards the partition-local node
// responsible for `key`. Each hop goes to the closest preceding finger (or
// the successor) that is reachable and carries the current node's label.
// `states` is indexed like view.members().
Route route_to_responsible(NodeId origin, NodeId key,
                           std::span<const NodeState> states,
                           const NetworkView& view, const RingConfig& cfg);

LookupResult lookup(NodeId origin, std::string_view name,
                    std::span<const NodeState> states, const NetworkView& view,
                    const RingConfig& cfg);

// Stores a record at `node` versioned (node.id, vv[node.id] + 1) and bumps
// the node's own version vector entry. The stored table is merged by lww, so
// a competing record with a higher version survives. Throws
// std::invalid_argument on an empty name or ttl == 0.
DnsRecord publish(NodeState& node, std::string_view name, std::string_view ip,
                  std::uint64_t ttl);

void anti_entropy_records(NodeState& node, const RecordTable& peer_records);

// One round of ttl: decrements every record and drops those that reach 0.
void expire_records(NodeState& node);

}  // namespace sgossip

#endif  // SGOSSIP_DNS_H_
