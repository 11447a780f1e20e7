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

#ifndef SGOSSIP_NETWORK_VIEW_H_
#define SGOSSIP_NETWORK_VIEW_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sgossip/ids.h"
#include "sgossip/node_set.h"

namespace sgossip {

// God-view oracle read by the protocol: membership, liveness, physical
// reachability (nodes in the same connectivity group) and the partition
// label each node currently reports. Setters leave the view stale until
// Rebuild() is called.
class NetworkView {
 public:
  // All members active, in group 0, labelled partition 0. `members` need not
  // be sorted; duplicates are rejected.
  explicit NetworkView(std::vector<NodeId> members);

  const std::vector<NodeId>& members() const { return members_; }
  std::optional<std::size_t> index_of(NodeId id) const;

  bool exists(NodeId id) const { return index_of(id).has_value(); }
  bool active(NodeId id) const;
  std::uint64_t group_of(NodeId id) const;
  PartitionId partition_of(NodeId id) const;
  bool reachable(NodeId from, NodeId to) const;

  // Active members sharing `from`'s group (including `from`); empty when
  // `from` is inactive.
  const NodeSet& reachable_from(NodeId from) const;
  // Existing members currently labelled `p`.
  const NodeSet& labeled(PartitionId p) const;

  void set_active(NodeId id, bool active);
  void set_group(NodeId id, std::uint64_t group);
  void set_partition(NodeId id, PartitionId p);
  void Rebuild();

 private:
  std::size_t require(NodeId id) const;

  std::vector<NodeId> members_;  // sorted
  std::vector<std::int32_t> index_;  // id -> position in members_, or -1
  std::vector<bool> active_;
  std::vector<std::uint64_t> group_;
  std::vector<PartitionId> label_;
  std::map<std::uint64_t, NodeSet> reach_masks_;
  std::map<PartitionId, NodeSet> label_masks_;
  NodeSet empty_;
};

}  // namespace sgossip

#endif  // SGOSSIP_NETWORK_VIEW_H_
