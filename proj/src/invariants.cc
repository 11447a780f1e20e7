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

#include "sgossip/invariants.h"

#include <algorithm>
#include <string>

namespace sgossip {

void InvariantChecker::OnTopologyChange(std::span<const NodeState> states,
                                        const NetworkView& view, bool relabelled) {
  expected_label_.clear();
  for (const auto& members : components(view)) {
    PartitionId lowest = states[*view.index_of(members.front())].partition;
    for (NodeId id : members) {
      lowest = std::min(lowest, states[*view.index_of(id)].partition);
    }
    expected_label_[members.front()] = lowest;
  }
  if (relabelled || prev_label_.size() != states.size()) {
    prev_label_.clear();
    prev_version_.clear();
    for (const NodeState& s : states) {
      prev_label_.push_back(s.partition);
      prev_version_.push_back(s.partition_version);
    }
  }
  if (prev_vv_.size() != states.size()) {
    prev_vv_.clear();
    for (const NodeState& s : states) prev_vv_.push_back(s.vv);
  }
}

std::vector<Violation> InvariantChecker::Check(
    std::span<const NodeState> states, const NetworkView& view,
    std::span<const ComponentStatus> comps) {
  std::vector<Violation> out;
  if (prev_label_.size() != states.size()) OnTopologyChange(states, view, true);

  for (std::size_t i = 0; i < states.size(); ++i) {
    const NodeState& s = states[i];
    // I1
    for (const auto& e : prev_vv_[i].entries()) {
      const std::uint64_t now = s.vv.get(e.node);
      if (now < e.counter) {
        out.push_back({"I1", s.id,
                       "vv[" + to_string(e.node) + "] fell from " +
                           std::to_string(e.counter) + " to " + std::to_string(now)});
      }
    }
    // I2, label direction and version bookkeeping
    if (s.partition > prev_label_[i]) {
      out.push_back({"I2", s.id,
                     "partition rose from " + to_string(prev_label_[i]) + " to " +
                         to_string(s.partition)});
    }
    if (s.partition_version < prev_version_[i]) {
      out.push_back({"I2", s.id, "partition_version decreased"});
    } else if (s.partition != prev_label_[i] && s.partition_version == prev_version_[i]) {
      out.push_back({"I2", s.id, "partition changed without a version bump"});
    }
    // I4, structural half
    if (view.active(s.id)) {
      for (const FingerEntry& f : s.fingers) {
        if (f.target && !view.reachable(s.id, *f.target)) {
          out.push_back({"I4", s.id,
                         "finger " + std::to_string(f.level) + " targets unreachable node " +
                             to_string(*f.target)});
        }
      }
    }
  }

  for (const ComponentStatus& c : comps) {
    if (!c.converged) continue;
    const NodeSet& members = view.reachable_from(c.key);
    // I2, quiescent label
    auto expected = expected_label_.find(c.key);
    if (expected != expected_label_.end() && c.partition != expected->second) {
      out.push_back({"I2", c.key,
                     "component settled on partition " + to_string(*c.partition) +
                         ", expected " + to_string(expected->second)});
    }
    // I3
    NodeSet seen;
    NodeId cur = c.key;
    bool cycle = true;
    for (std::size_t step = 0; step < c.size; ++step) {
      if (!members.contains(cur) || seen.contains(cur)) {
        cycle = false;
        break;
      }
      seen.insert(cur);
      cur = states[*view.index_of(cur)].successor;
    }
    if (!cycle || cur != c.key) {
      out.push_back({"I3", c.key, "successor links do not form a single cycle"});
    }
    // I4, label half
    members.for_each([&](NodeId id) {
      const NodeState& s = states[*view.index_of(id)];
      for (const FingerEntry& f : s.fingers) {
        if (f.target && view.partition_of(*f.target) != s.partition) {
          out.push_back({"I4", id,
                         "finger " + std::to_string(f.level) +
                             " crosses partitions in a settled component"});
        }
      }
    });
  }

  for (std::size_t i = 0; i < states.size(); ++i) {
    prev_label_[i] = states[i].partition;
    prev_version_[i] = states[i].partition_version;
    prev_vv_[i] = states[i].vv;
  }
  return out;
}

}  // namespace sgossip
