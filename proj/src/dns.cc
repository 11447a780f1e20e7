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

#include "sgossip/dns.h"

#include <stdexcept>

namespace sgossip {

std::string_view to_string(LookupOutcome outcome) {
  switch (outcome) {
    case LookupOutcome::kFound:
      return "FOUND";
    case LookupOutcome::kNotFound:
      return "NOT_FOUND";
    case LookupOutcome::kUnreachable:
      return "UNREACHABLE";
  }
  return "UNREACHABLE";
}

namespace {

bool usable_hop(NodeId from, NodeId to, const NetworkView& view) {
  return from != to && view.reachable(from, to) &&
         view.partition_of(to) == view.partition_of(from);
}

}  // namespace

Route route_to_responsible(NodeId origin, NodeId key,
                           std::span<const NodeState> states,
                           const NetworkView& view, const RingConfig& cfg) {
  Route route;
  route.path.push_back(origin);
  if (!view.active(origin)) return route;

  NodeId cur = origin;
  // A correct route visits each node at most once.
  for (std::size_t step = 0; step <= view.members().size(); ++step) {
    const NodeState& s = states[*view.index_of(cur)];
    if (s.successor == cur) {
      route.reached = true;
      return route;
    }
    if (s.predecessor && usable_hop(cur, *s.predecessor, view) &&
        in_interval(key, *s.predecessor, cur, cfg)) {
      route.reached = true;
      return route;
    }
    if (!usable_hop(cur, s.successor, view)) return route;
    if (in_interval(key, cur, s.successor, cfg)) {
      route.path.push_back(s.successor);
      route.reached = true;
      return route;
    }
    const std::uint64_t to_key = clockwise_distance(cur, key, cfg);
    NodeId next = s.successor;
    std::uint64_t best = clockwise_distance(cur, next, cfg);
    for (const FingerEntry& f : s.fingers) {
      if (!f.target || !usable_hop(cur, *f.target, view)) continue;
      const std::uint64_t d = clockwise_distance(cur, *f.target, cfg);
      if (d < to_key && d > best) {
        best = d;
        next = *f.target;
      }
    }
    route.path.push_back(next);
    cur = next;
  }
  return route;
}

LookupResult lookup(NodeId origin, std::string_view name,
                    std::span<const NodeState> states, const NetworkView& view,
                    const RingConfig& cfg) {
  const NodeId key = hash_name(name, cfg);
  Route route = route_to_responsible(origin, key, states, view, cfg);
  LookupResult r;
  r.path = std::move(route.path);
  r.hops = r.path.size() - 1;
  if (!route.reached) return r;

  const NodeId terminal = r.path.back();
  std::vector<NodeId> live;
  for (NodeId id : view.members()) {
    if (view.active(id)) live.push_back(id);
  }
  r.authoritative = responsible_node(key, live) == terminal;
  const NodeState& t = states[*view.index_of(terminal)];
  if (auto it = t.dns_records.find(std::string(name)); it != t.dns_records.end()) {
    r.outcome = LookupOutcome::kFound;
    r.record = it->second;
  } else {
    r.outcome = LookupOutcome::kNotFound;
  }
  return r;
}

DnsRecord publish(NodeState& node, std::string_view name, std::string_view ip,
                  std::uint64_t ttl) {
  if (name.empty()) throw std::invalid_argument("publish: empty name");
  if (ttl == 0) throw std::invalid_argument("publish: ttl must be >= 1");
  DnsRecord rec{std::string(name), std::string(ip), ttl,
                RecordVersion{node.id, node.vv.increment(node.id)}};
  merge_records(node.dns_records, RecordTable{{rec.name, rec}});
  return rec;
}

void anti_entropy_records(NodeState& node, const RecordTable& peer_records) {
  merge_records(node.dns_records, peer_records);
}

void expire_records(NodeState& node) {
  for (auto it = node.dns_records.begin(); it != node.dns_records.end();) {
    if (--it->second.ttl == 0) {
      it = node.dns_records.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace sgossip
