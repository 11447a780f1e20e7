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

#ifndef SGOSSIP_SIMULATOR_H_
#define SGOSSIP_SIMULATOR_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgossip/chord_node.h"
#include "sgossip/dns.h"
#include "sgossip/fault_model.h"
#include "sgossip/gossip.h"
#include "sgossip/invariants.h"
#include "sgossip/json_io.h"
#include "sgossip/network_view.h"
#include "sgossip/partition_merger.h"
#include "sgossip/scenario.h"

namespace sgossip {

struct RoundMetrics {
  std::uint64_t round = 0;
  std::uint64_t gossip_sent = 0;
  std::uint64_t record_sent = 0;
  std::uint64_t baseline_sent = 0;
  std::vector<ComponentStatus> components;
  std::vector<Violation> violations;
  std::uint64_t merge_decisions = 0;
  // Most gossip messages delivered to a single node from this round.
  std::uint64_t max_received = 0;
  std::uint64_t active_nodes = 0;

  std::size_t converged_components() const;
  bool all_converged() const;
};

struct SimOptions {
  FingerPolicy policy = FingerPolicy::kRotating;
  // Non-zero switches target selection to the unstructured fanout-k
  // epidemic; its sends are counted as baseline_sent.
  std::uint32_t baseline_fanout = 0;
  bool log_messages = false;
  bool shuffle_delivery = false;
  bool duplicate_delivery = false;
};

struct PublishOutcome {
  Route route;
  NodeId stored_at;
  DnsRecord record;
};

// Lock-step round scheduler. A round runs
//
//   (1) deliver last round's messages  (2) apply commands/scheduled events
//   (3) stabilize + repair fingers     (4) select targets and send
//   (5) detect cross-partition links   (6) merger step
//   (7) ttl expiry                     (8) metrics + invariant checks
//
// The simulator rests between (1) and (2): commands issued between step()
// calls land in phase 2 of the upcoming round, exactly where scheduled
// events do. step() runs phases 3-8 and then delivers for the next round.
// Phases read partition labels from a snapshot taken at phase start.
class Simulator {
 public:
  explicit Simulator(const NetworkSpec& spec, SimOptions options = {});

  // Phase-2 commands. Each validates first and throws std::invalid_argument
  // without side effects on bad input.
  std::vector<PartitionId> split(const std::vector<std::vector<NodeId>>& fragments);
  // Empty list heals everything.
  void heal(const std::vector<PartitionId>& partitions);
  void kill(NodeId node);
  void revive(NodeId node);
  PublishOutcome publish(NodeId node, std::string_view name, std::string_view ip,
                         std::uint64_t ttl);
  LookupResult lookup(NodeId origin, std::string_view name);
  void apply(const EventBody& event);

  // Events fire at the start of step() for their round.
  void schedule(std::vector<ScheduledEvent> events);
  bool has_pending_events() const { return next_event_ < schedule_.size(); }

  const RoundMetrics& step();

  // Every component converged, with identical version vectors and record
  // versions across its members.
  bool settled() const;

  // Routing only, no log entry.
  Route route(NodeId origin, NodeId key) const;

  std::uint64_t round() const { return round_; }
  std::uint64_t last_topology_round() const { return last_topology_round_; }
  const RingConfig& config() const { return spec_.cfg; }
  const NetworkSpec& spec() const { return spec_; }
  const SimOptions& options() const { return options_; }
  const std::vector<NodeId>& members() const { return view_.members(); }
  std::span<const NodeState> states() const { return states_; }
  const NodeState& state(NodeId id) const;
  // Direct access for tests that corrupt state on purpose.
  NodeState& mutable_state(NodeId id);
  const NetworkView& view() const { return view_; }
  const FaultModel& faults() const { return faults_; }
  const std::vector<std::string>& event_log() const { return log_; }
  const std::vector<RoundMetrics>& metrics() const { return metrics_; }
  const std::vector<MergeDecision>& merge_log() const { return merges_; }

  Json state_json() const;

 private:
  struct GossipDelivery {
    std::size_t to;
    std::shared_ptr<const GossipMessage> msg;
  };
  struct RecordDelivery {
    std::size_t to;
    std::shared_ptr<const RecordTable> records;
  };

  std::size_t index(NodeId id) const;
  void emit(Json event);
  void sync_view();
  void topology_changed(bool relabelled);
  std::vector<NodeId> baseline_targets(const NodeState& node);
  void deliver();

  NetworkSpec spec_;
  SimOptions options_;
  FaultModel faults_;
  NetworkView view_;
  std::vector<NodeState> states_;
  InvariantChecker checker_;
  std::mt19937_64 baseline_rng_;
  std::mt19937_64 delivery_rng_;

  std::uint64_t round_ = 0;
  std::uint64_t last_topology_round_ = 0;
  std::uint64_t seq_ = 0;
  std::vector<ScheduledEvent> schedule_;
  std::size_t next_event_ = 0;
  std::vector<GossipDelivery> gossip_outbox_;
  std::vector<RecordDelivery> record_outbox_;
  std::map<NodeId, std::size_t> converged_;  // component key -> size
  std::vector<std::string> log_;
  std::vector<RoundMetrics> metrics_;
  std::vector<MergeDecision> merges_;
};

}  // namespace sgossip

#endif  // SGOSSIP_SIMULATOR_H_
