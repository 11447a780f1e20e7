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

#ifndef SGOSSIP_JSON_IO_H_
#define SGOSSIP_JSON_IO_H_

#include <vector>

#include "json.hpp"
#include "sgossip/chord_node.h"
#include "sgossip/dns.h"
#include "sgossip/gossip.h"
#include "sgossip/ids.h"
#include "sgossip/node_set.h"
#include "sgossip/version_vector.h"

// Canonical JSON shapes shared by the event log, the control API and the
// Python bindings. Field order is fixed so logs diff cleanly.
namespace sgossip {

using Json = nlohmann::ordered_json;

Json to_json(const NodeSet& set);
Json to_json(const std::vector<NodeId>& ids);
// [[node, counter], ...] sorted by node.
Json to_json(const VersionVector& vv);
Json to_json(const DnsRecord& record);
// {sender, knownNodes, vv, partitionId, partitionVersion}
Json to_json(const GossipMessage& msg);
Json to_json(const LookupResult& result);
// Node table row served by GET /state.
Json to_json(const NodeState& node, bool reachable_active);

}  // namespace sgossip

#endif  // SGOSSIP_JSON_IO_H_
