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

#include "sgossip/json_io.h"

namespace sgossip {

Json to_json(const NodeSet& set) {
  Json out = Json::array();
  set.for_each([&](NodeId id) { out.push_back(id.value); });
  return out;
}

Json to_json(const std::vector<NodeId>& ids) {
  Json out = Json::array();
  for (NodeId id : ids) out.push_back(id.value);
  return out;
}

Json to_json(const VersionVector& vv) {
  Json out = Json::array();
  for (const auto& e : vv.entries()) out.push_back(Json::array({e.node.value, e.counter}));
  return out;
}

Json to_json(const DnsRecord& record) {
  Json out;
  out["name"] = record.name;
  out["ip"] = record.ip;
  out["ttl"] = record.ttl;
  out["version"] = {{"origin", record.version.origin.value},
                    {"counter", record.version.counter}};
  return out;
}

Json to_json(const GossipMessage& msg) {
  Json out;
  out["sender"] = msg.sender.value;
  out["knownNodes"] = to_json(msg.known_nodes);
  out["vv"] = to_json(msg.vv);
  out["partitionId"] = msg.partition.value;
  out["partitionVersion"] = msg.partition_version;
  return out;
}

Json to_json(const LookupResult& result) {
  Json out;
  out["outcome"] = to_string(result.outcome);
  out["hops"] = result.hops;
  out["path"] = to_json(result.path);
  out["record"] = result.record ? to_json(*result.record) : Json(nullptr);
  out["authoritative"] = result.authoritative;
  return out;
}

Json to_json(const NodeState& node, bool reachable_active) {
  Json out;
  out["id"] = node.id.value;
  out["active"] = reachable_active;
  out["partition"] = node.partition.value;
  out["partitionVersion"] = node.partition_version;
  out["successor"] = node.successor.value;
  out["predecessor"] = node.predecessor ? Json(node.predecessor->value) : Json(nullptr);
  Json fingers = Json::array();
  for (const FingerEntry& f : node.fingers) {
    Json e;
    e["level"] = f.level;
    e["start"] = f.start.value;
    e["target"] = f.target ? Json(f.target->value) : Json(nullptr);
    e["valid"] = f.valid();
    fingers.push_back(std::move(e));
  }
  out["fingers"] = std::move(fingers);
  Json links = Json::array();
  for (NodeId id : node.cross_partition_links) links.push_back(id.value);
  out["crossPartitionLinks"] = std::move(links);
  Json parts = Json::array();
  for (PartitionId p : node.known_partitions) parts.push_back(p.value);
  out["knownPartitions"] = std::move(parts);
  out["knownNodes"] = node.known_nodes.size();
  out["vv"] = {{"entries", node.vv.entries().size()}, {"max", node.vv.max_counter()}};
  out["records"] = node.dns_records.size();
  out["lastUpdate"] = node.last_update;
  return out;
}

}  // namespace sgossip
