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

#ifndef SGOSSIP_SCENARIO_H_
#define SGOSSIP_SCENARIO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sgossip/gossip.h"
#include "sgossip/ids.h"

namespace sgossip {

enum class IdMode { kDense, kHashed };

std::string_view to_string(IdMode mode);
IdMode parse_id_mode(std::string_view text);

struct NetworkSpec {
  std::size_t n = 16;
  RingConfig cfg;
  IdMode id_mode = IdMode::kDense;
};

// Node identifiers for a network: 0..n-1 in dense mode, otherwise
// hash_name("node:<seed>:<i>") with linear probing on collisions. Sorted.
// Throws std::invalid_argument when 2^m < n.
std::vector<NodeId> assign_node_ids(const NetworkSpec& spec);

struct SplitEvent {
  std::vector<std::vector<NodeId>> fragments;
};
// An empty `partitions` list heals everything.
struct HealEvent {
  std::vector<PartitionId> partitions;
};
struct PublishEvent {
  NodeId node;
  std::string name;
  std::string ip;
  std::uint64_t ttl = 0;
};
struct LookupEvent {
  NodeId origin;
  std::string name;
};
struct KillEvent {
  NodeId node;
};
struct ReviveEvent {
  NodeId node;
};

using EventBody = std::variant<SplitEvent, HealEvent, PublishEvent, LookupEvent,
                               KillEvent, ReviveEvent>;

bool is_topology_event(const EventBody& body);

struct ScheduledEvent {
  std::uint64_t round = 0;
  EventBody body;
};

struct Scenario {
  NetworkSpec network;
  std::uint64_t max_rounds = 256;
  FingerPolicy policy = FingerPolicy::kRotating;
  std::optional<std::uint32_t> baseline_fanout;
  bool log_messages = false;
  bool shuffle_delivery = false;
  bool duplicate_delivery = false;
  // Stop once every event has fired and every component has settled.
  bool stop_when_settled = true;
  std::vector<ScheduledEvent> events;
};

// Validation failure with the offending JSON location, e.g.
// "events[2].fragments".
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Parses and validates a schema-1 scenario document.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

// Dry-runs the event schedule against a fault model so bad splits, heals and
// references to dead or unknown nodes fail before round 0.
void validate_scenario(const Scenario& scenario);

}  // namespace sgossip

#endif  // SGOSSIP_SCENARIO_H_
