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

#ifndef SGOSSIP_INVARIANTS_H_
#define SGOSSIP_INVARIANTS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sgossip/chord_node.h"
#include "sgossip/network_view.h"
#include "sgossip/partition_merger.h"
#include "sgossip/version_vector.h"

namespace sgossip {

struct Violation {
  std::string invariant;  // "I1".."I4"
  NodeId node;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

// Round-by-round checker for the four system invariants.
//
//   I1  version vectors never decrease (every round).
//   I2  partition labels only move down between splits, partition_version
//       grows with every label change, and a converged component carries the
//       smallest label present at its last topology change.
//   I3  in a converged component the successor pointers form one cycle
//       through every member.
//   I4  every valid finger of a live node targets a live, reachable node
//       (every round); in a converged component it also shares the label.
//
// I2's label check and I3 are gated on convergence of the component, since
// they only describe the quiescent state.
class InvariantChecker {
 public:
  // Call after construction and after every split, heal, kill or revive.
  // `relabelled` marks a split, which resets the label baselines.
  void OnTopologyChange(std::span<const NodeState> states, const NetworkView& view,
                        bool relabelled);

  std::vector<Violation> Check(std::span<const NodeState> states,
                               const NetworkView& view,
                               std::span<const ComponentStatus> components);

 private:
  std::map<NodeId, PartitionId> expected_label_;  // by component key
  std::vector<PartitionId> prev_label_;
  std::vector<std::uint64_t> prev_version_;
  std::vector<VersionVector> prev_vv_;
};

}  // namespace sgossip

#endif  // SGOSSIP_INVARIANTS_H_
