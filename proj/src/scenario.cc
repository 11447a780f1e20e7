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

#include "sgossip/scenario.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sgossip/fault_model.h"

namespace sgossip {

using nlohmann::json;

std::string_view to_string(IdMode mode) {
  return mode == IdMode::kDense ? "dense" : "hashed";
}

IdMode parse_id_mode(std::string_view text) {
  if (text == "dense") return IdMode::kDense;
  if (text == "hashed") return IdMode::kHashed;
  throw std::invalid_argument("unknown id_mode '" + std::string(text) +
                              "' (expected dense or hashed)");
}

std::vector<NodeId> assign_node_ids(const NetworkSpec& spec) {
  spec.cfg.Validate();
  if (spec.n == 0) throw std::invalid_argument("network needs at least one node");
  if (spec.n > spec.cfg.ring_size()) {
    throw std::invalid_argument("2^m = " + std::to_string(spec.cfg.ring_size()) +
                                " cannot hold " + std::to_string(spec.n) + " nodes");
  }
  std::vector<NodeId> ids;
  ids.reserve(spec.n);
  if (spec.id_mode == IdMode::kDense) {
    for (std::size_t i = 0; i < spec.n; ++i) ids.push_back(NodeId{i});
    return ids;
  }
  std::set<NodeId> taken;
  for (std::size_t i = 0; i < spec.n; ++i) {
    NodeId id = hash_name("node:" + std::to_string(spec.cfg.seed) + ":" +
                              std::to_string(i),
                          spec.cfg);
    while (taken.contains(id)) id = NodeId{(id.value + 1) & spec.cfg.mask()};
    taken.insert(id);
  }
  return {taken.begin(), taken.end()};
}

bool is_topology_event(const EventBody& body) {
  return !std::holds_alternative<PublishEvent>(body) &&
         !std::holds_alternative<LookupEvent>(body);
}

namespace {

std::string at(const std::string& parent, std::string_view key) {
  return parent.empty() ? std::string(key) : parent + "." + std::string(key);
}

std::string at(const std::string& parent, std::size_t index) {
  return parent + "[" + std::to_string(index) + "]";
}

const json& require_field(const json& obj, const std::string& path,
                          std::string_view key) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ScenarioError(at(path, key), "missing field");
  return *it;
}

std::uint64_t as_uint(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ScenarioError(path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ScenarioError(path, "expected a string");
  return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) throw ScenarioError(path, "expected true or false");
  return v.get<bool>();
}

NodeId as_node(const json& v, const std::string& path) {
  return NodeId{as_uint(v, path)};
}

SplitEvent parse_split(const json& e, const std::string& path) {
  const std::string fpath = at(path, "fragments");
  const json& frags = require_field(e, path, "fragments");
  if (!frags.is_array() || frags.empty()) {
    throw ScenarioError(fpath, "expected a non-empty array of node lists");
  }
  SplitEvent split;
  for (std::size_t i = 0; i < frags.size(); ++i) {
    if (!frags[i].is_array() || frags[i].empty()) {
      throw ScenarioError(at(fpath, i), "expected a non-empty array of node ids");
    }
    std::vector<NodeId> fragment;
    for (std::size_t j = 0; j < frags[i].size(); ++j) {
      fragment.push_back(as_node(frags[i][j], at(at(fpath, i), j)));
    }
    split.fragments.push_back(std::move(fragment));
  }
  return split;
}

HealEvent parse_heal(const json& e, const std::string& path) {
  const std::string ppath = at(path, "partitions");
  const json& parts = require_field(e, path, "partitions");
  HealEvent heal;
  if (parts.is_string()) {
    if (parts.get<std::string>() != "all") {
      throw ScenarioError(ppath, "expected \"all\" or an array of partition ids");
    }
    return heal;
  }
  if (!parts.is_array() || parts.size() < 2) {
    throw ScenarioError(ppath, "expected \"all\" or at least two partition ids");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    heal.partitions.push_back(PartitionId{as_uint(parts[i], at(ppath, i))});
  }
  return heal;
}

ScheduledEvent parse_event(const json& e, const std::string& path) {
  if (!e.is_object()) throw ScenarioError(path, "expected an object");
  ScheduledEvent ev;
  ev.round = as_uint(require_field(e, path, "round"), at(path, "round"));
  const std::string type = as_string(require_field(e, path, "type"), at(path, "type"));
  if (type == "split") {
    ev.body = parse_split(e, path);
  } else if (type == "heal") {
    ev.body = parse_heal(e, path);
  } else if (type == "publish") {
    PublishEvent p;
    p.node = as_node(require_field(e, path, "node"), at(path, "node"));
    p.name = as_string(require_field(e, path, "name"), at(path, "name"));
    p.ip = as_string(require_field(e, path, "ip"), at(path, "ip"));
    p.ttl = as_uint(require_field(e, path, "ttl"), at(path, "ttl"));
    if (p.name.empty()) throw ScenarioError(at(path, "name"), "empty name");
    if (p.ttl == 0) throw ScenarioError(at(path, "ttl"), "ttl must be >= 1");
    ev.body = std::move(p);
  } else if (type == "lookup") {
    LookupEvent l;
    l.origin = as_node(require_field(e, path, "origin"), at(path, "origin"));
    l.name = as_string(require_field(e, path, "name"), at(path, "name"));
    if (l.name.empty()) throw ScenarioError(at(path, "name"), "empty name");
    ev.body = std::move(l);
  } else if (type == "kill") {
    ev.body = KillEvent{as_node(require_field(e, path, "node"), at(path, "node"))};
  } else if (type == "revive") {
    ev.body = ReviveEvent{as_node(require_field(e, path, "node"), at(path, "node"))};
  } else {
    throw ScenarioError(at(path, "type"), "unknown event type '" + type + "'");
  }
  return ev;
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
      if (json_text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ScenarioError("line " + std::to_string(line) + ", column " +
                            std::to_string(col),
                        "malformed JSON");
  }
  if (!doc.is_object()) throw ScenarioError("", "scenario must be a JSON object");

  const std::uint64_t schema = as_uint(require_field(doc, "", "schema"), "schema");
  if (schema != 1) throw ScenarioError("schema", "unsupported schema version");

  Scenario s;
  s.network.n = as_uint(require_field(doc, "", "n"), "n");
  if (s.network.n == 0) throw ScenarioError("n", "must be >= 1");
  if (auto it = doc.find("id_mode"); it != doc.end()) {
    try {
      s.network.id_mode = parse_id_mode(as_string(*it, "id_mode"));
    } catch (const std::invalid_argument& e) {
      throw ScenarioError("id_mode", e.what());
    }
  }
  if (auto it = doc.find("m"); it != doc.end()) {
    s.network.cfg.m = static_cast<int>(std::min<std::uint64_t>(as_uint(*it, "m"), 64));
  } else if (s.network.id_mode == IdMode::kDense) {
    s.network.cfg.m = bits_for(s.network.n);
  }
  if (auto it = doc.find("seed"); it != doc.end()) s.network.cfg.seed = as_uint(*it, "seed");
  try {
    s.network.cfg.Validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("m", e.what());
  }
  if (s.network.n > s.network.cfg.ring_size()) {
    throw ScenarioError("n", "does not fit in a 2^m ring");
  }
  if (auto it = doc.find("max_rounds"); it != doc.end()) {
    s.max_rounds = as_uint(*it, "max_rounds");
    if (s.max_rounds == 0) throw ScenarioError("max_rounds", "must be >= 1");
  }
  if (auto it = doc.find("finger_policy"); it != doc.end()) {
    try {
      s.policy = parse_finger_policy(as_string(*it, "finger_policy"));
    } catch (const std::invalid_argument& e) {
      throw ScenarioError("finger_policy", e.what());
    }
  }
  if (auto it = doc.find("baseline"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) throw ScenarioError("baseline", "expected {\"fanout\": k}");
    const std::uint64_t k = as_uint(require_field(*it, "baseline", "fanout"), "baseline.fanout");
    if (k == 0) throw ScenarioError("baseline.fanout", "must be >= 1");
    s.baseline_fanout = static_cast<std::uint32_t>(k);
  }
  if (auto it = doc.find("log_messages"); it != doc.end()) {
    s.log_messages = as_bool(*it, "log_messages");
  }
  if (auto it = doc.find("shuffle_delivery"); it != doc.end()) {
    s.shuffle_delivery = as_bool(*it, "shuffle_delivery");
  }
  if (auto it = doc.find("duplicate_delivery"); it != doc.end()) {
    s.duplicate_delivery = as_bool(*it, "duplicate_delivery");
  }
  if (auto it = doc.find("stop_when_settled"); it != doc.end()) {
    s.stop_when_settled = as_bool(*it, "stop_when_settled");
  }
  if (auto it = doc.find("events"); it != doc.end()) {
    if (!it->is_array()) throw ScenarioError("events", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      s.events.push_back(parse_event((*it)[i], at("events", i)));
    }
  }
  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

void validate_scenario(const Scenario& s) {
  std::vector<NodeId> ids;
  try {
    ids = assign_node_ids(s.network);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("n", e.what());
  }
  FaultModel faults(ids);
  std::uint64_t prev_round = 0;
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const ScheduledEvent& ev = s.events[i];
    const std::string path = at("events", i);
    if (ev.round < prev_round) {
      throw ScenarioError(at(path, "round"), "events must be sorted by round");
    }
    if (ev.round >= s.max_rounds) {
      throw ScenarioError(at(path, "round"), "scheduled at or after max_rounds");
    }
    prev_round = ev.round;
    auto require_live = [&](NodeId id, std::string_view field) {
      if (!faults.is_member(id)) {
        throw ScenarioError(at(path, field), "unknown node " + to_string(id));
      }
      if (!faults.active(id)) {
        throw ScenarioError(at(path, field), "node " + to_string(id) + " is down");
      }
    };
    try {
      std::visit(
          [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, SplitEvent>) {
              faults.split(body.fragments);
            } else if constexpr (std::is_same_v<T, HealEvent>) {
              faults.heal(body.partitions);
            } else if constexpr (std::is_same_v<T, PublishEvent>) {
              require_live(body.node, "node");
            } else if constexpr (std::is_same_v<T, LookupEvent>) {
              require_live(body.origin, "origin");
            } else if constexpr (std::is_same_v<T, KillEvent>) {
              faults.kill(body.node);
            } else {
              faults.revive(body.node);
            }
          },
          ev.body);
    } catch (const std::invalid_argument& e) {
      const char* field = std::holds_alternative<SplitEvent>(ev.body)  ? "fragments"
                          : std::holds_alternative<HealEvent>(ev.body) ? "partitions"
                                                                       : "node";
      throw ScenarioError(at(path, field), e.what());
    }
  }
}

}  // namespace sgossip
