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

#ifndef SGOSSIP_FAULT_MODEL_H_
#define SGOSSIP_FAULT_MODEL_H_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sgossip/ids.h"

namespace sgossip {

// Harness-side connectivity: which nodes are alive and which connectivity
// group each belongs to. Two live nodes can talk iff they share a group.
// A group is named by the smallest member of the fragment that created it;
// healing joins groups under the smallest name.
//
// Every mutator validates before changing anything and throws
// std::invalid_argument on misuse.
class FaultModel {
 public:
  explicit FaultModel(std::vector<NodeId> members);

  const std::vector<NodeId>& members() const { return members_; }
  bool is_member(NodeId id) const;
  bool active(NodeId id) const;
  std::uint64_t group_of(NodeId id) const;
  std::set<std::uint64_t> groups() const;

  // Fragments must be non-empty, disjoint and together cover every member.
  // Returns each fragment's id in input order.
  std::vector<PartitionId> split(const std::vector<std::vector<NodeId>>& fragments);

  // Joins the listed groups (at least two distinct existing ones), or all
  // groups when `partitions` is empty. Returns the surviving group id.
  std::uint64_t heal(const std::vector<PartitionId>& partitions);
  std::uint64_t heal_all();

  void kill(NodeId id);
  void revive(NodeId id);

 private:
  std::size_t require(NodeId id) const;

  std::vector<NodeId> members_;  // sorted
  std::vector<bool> active_;
  std::vector<std::uint64_t> group_;
};

}  // namespace sgossip

#endif  // SGOSSIP_FAULT_MODEL_H_
