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

#include "sgossip/simulator.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sgossip/rng.h"

namespace sgossip {

std::size_t RoundMetrics::converged_components() const {
  return static_cast<std::size_t>(std::count_if(
      components.begin(), components.end(), [](const auto& c) { return c.converged; }));
}

bool RoundMetrics::all_converged() const {
  return converged_components() == components.size();
}

namespace {

Json event(std::uint64_t& seq, std::string_view type) {
  Json e;
  e["seq"] = seq++;
  e["type"] = type;
  return e;
}

Json partition_list(const std::vector<PartitionId>& ids) {
  Json out = Json::array();
  for (PartitionId p : ids) out.push_back(p.value);
  return out;
}

bool same_hard_state(const NodeState& a, const NodeState& b) {
  if (!(a.vv == b.vv) || a.dns_records.size() != b.dns_records.size()) return false;
  return std::equal(a.dns_records.begin(), a.dns_records.end(), b.dns_records.begin(),
                    [](const auto& x, const auto& y) {
                      return x.first == y.first && x.second.version == y.second.version;
                    });
}

}  // namespace

Simulator::Simulator(const NetworkSpec& spec, SimOptions options)
    : spec_(spec),
      options_(options),
      faults_(assign_node_ids(spec)),
      view_(faults_.members()),
      baseline_rng_(make_rng(spec.cfg.seed, RngStream::kBaselinePeers)),
      delivery_rng_(make_rng(spec.cfg.seed, RngStream::kDeliveryOrder)) {
  const auto& ids = view_.members();
  states_.reserve(ids.size());
  for (NodeId id : ids) states_.push_back(build_initial_state(id, ids, spec_.cfg));

  Json e = event(seq_, "network");
  e["n"] = spec_.n;
  e["m"] = spec_.cfg.m;
  e["id_mode"] = to_string(spec_.id_mode);
  e["seed"] = spec_.cfg.seed;
  e["policy"] = options_.baseline_fanout > 0
                    ? "fanout-" + std::to_string(options_.baseline_fanout)
                    : std::string(to_string(options_.policy));
  e["nodes"] = to_json(ids);
  emit(std::move(e));
  sync_view();
  checker_.OnTopologyChange(states_, view_, true);
}

std::size_t Simulator::index(NodeId id) const {
  auto i = view_.index_of(id);
  if (!i) throw std::invalid_argument("unknown node " + to_string(id));
  return *i;
}

const NodeState& Simulator::state(NodeId id) const { return states_[index(id)]; }

NodeState& Simulator::mutable_state(NodeId id) { return states_[index(id)]; }

void Simulator::emit(Json e) {
  e["round"] = round_;
  log_.push_back(e.dump());
}

void Simulator::sync_view() {
  for (const NodeState& s : states_) {
    view_.set_active(s.id, faults_.active(s.id));
    view_.set_group(s.id, faults_.group_of(s.id));
    view_.set_partition(s.id, s.partition);
  }
  view_.Rebuild();
}

void Simulator::topology_changed(bool relabelled) {
  last_topology_round_ = round_;
  sync_view();
  checker_.OnTopologyChange(states_, view_, relabelled);
}

std::vector<PartitionId> Simulator::split(
    const std::vector<std::vector<NodeId>>& fragments) {
  std::vector<PartitionId> ids = faults_.split(fragments);
  for (const auto& [node, label] : assign_fragment_ids(fragments)) {
    NodeState& s = states_[index(node)];
    if (s.partition != label) {
      s.partition = label;
      ++s.partition_version;
    }
    s.cross_partition_links.clear();
    s.known_partitions = {label};
  }
  Json e = event(seq_, "split");
  Json frags = Json::array();
  for (const auto& f : fragments) frags.push_back(to_json(f));
  e["fragments"] = std::move(frags);
  e["partition_ids"] = partition_list(ids);
  emit(std::move(e));
  topology_changed(true);
  return ids;
}

void Simulator::heal(const std::vector<PartitionId>& partitions) {
  faults_.heal(partitions);
  Json e = event(seq_, "heal");
  e["partitions"] = partitions.empty() ? Json("all") : partition_list(partitions);
  emit(std::move(e));
  topology_changed(false);
}

void Simulator::kill(NodeId node) {
  faults_.kill(node);
  states_[index(node)].active = false;
  Json e = event(seq_, "kill");
  e["node"] = node.value;
  emit(std::move(e));
  topology_changed(false);
}

void Simulator::revive(NodeId node) {
  faults_.revive(node);
  states_[index(node)].active = true;
  Json e = event(seq_, "revive");
  e["node"] = node.value;
  emit(std::move(e));
  topology_changed(false);
}

PublishOutcome Simulator::publish(NodeId node, std::string_view name,
                                  std::string_view ip, std::uint64_t ttl) {
  if (!faults_.active(node)) {
    throw std::invalid_argument("node " + to_string(node) + " is down");
  }
  if (name.empty()) throw std::invalid_argument("empty name");
  if (ttl == 0) throw std::invalid_argument("ttl must be >= 1");
  PublishOutcome out;
  out.route = route(node, hash_name(name, spec_.cfg));
  // A dead-ended route stores at the furthest node it got to.
  out.stored_at = out.route.terminal();
  out.record = sgossip::publish(states_[index(out.stored_at)], name, ip, ttl);

  Json e = event(seq_, "publish");
  e["node"] = node.value;
  e["name"] = name;
  e["ip"] = ip;
  e["ttl"] = ttl;
  e["stored_at"] = out.stored_at.value;
  e["routed"] = out.route.reached;
  e["path"] = to_json(out.route.path);
  e["version"] = {{"origin", out.record.version.origin.value},
                  {"counter", out.record.version.counter}};
  emit(std::move(e));
  return out;
}

LookupResult Simulator::lookup(NodeId origin, std::string_view name) {
  index(origin);
  if (name.empty()) throw std::invalid_argument("empty name");
  LookupResult r = sgossip::lookup(origin, name, states_, view_, spec_.cfg);
  Json e = event(seq_, "lookup");
  e["origin"] = origin.value;
  e["name"] = name;
  e["outcome"] = to_string(r.outcome);
  e["hops"] = r.hops;
  e["path"] = to_json(r.path);
  e["record"] = r.record ? to_json(*r.record) : Json(nullptr);
  e["authoritative"] = r.authoritative;
  emit(std::move(e));
  return r;
}

Route Simulator::route(NodeId origin, NodeId key) const {
  return route_to_responsible(origin, key, states_, view_, spec_.cfg);
}

void Simulator::apply(const EventBody& body) {
  std::visit(
      [&](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, SplitEvent>) {
          split(ev.fragments);
        } else if constexpr (std::is_same_v<T, HealEvent>) {
          heal(ev.partitions);
        } else if constexpr (std::is_same_v<T, PublishEvent>) {
          publish(ev.node, ev.name, ev.ip, ev.ttl);
        } else if constexpr (std::is_same_v<T, LookupEvent>) {
          lookup(ev.origin, ev.name);
        } else if constexpr (std::is_same_v<T, KillEvent>) {
          kill(ev.node);
        } else {
          revive(ev.node);
        }
      },
      body);
}

void Simulator::schedule(std::vector<ScheduledEvent> events) {
  std::stable_sort(events.begin(), events.end(),
                   [](const auto& a, const auto& b) { return a.round < b.round; });
  schedule_.erase(schedule_.begin(), schedule_.begin() + next_event_);
  next_event_ = 0;
  schedule_.insert(schedule_.end(), std::make_move_iterator(events.begin()),
                   std::make_move_iterator(events.end()));
  std::stable_sort(schedule_.begin(), schedule_.end(),
                   [](const auto& a, const auto& b) { return a.round < b.round; });
}

std::vector<NodeId> Simulator::baseline_targets(const NodeState& node) {
  NodeSet pool = view_.reachable_from(node.id);
  pool &= view_.labeled(node.partition);
  pool.erase(node.id);
  std::vector<NodeId> peers = pool.to_vector();
  const std::size_t k = options_.baseline_fanout;
  if (peers.size() <= k) return peers;
  std::vector<NodeId> chosen;
  while (chosen.size() < k) {
    const NodeId pick = peers[uniform_below(baseline_rng_, peers.size())];
    if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end()) {
      chosen.push_back(pick);
    }
  }
  return chosen;
}

const RoundMetrics& Simulator::step() {
  while (next_event_ < schedule_.size() && schedule_[next_event_].round <= round_) {
    apply(schedule_[next_event_++].body);
  }
  const RingConfig& cfg = spec_.cfg;
  RoundMetrics m;
  m.round = round_;

  // (3) passive structure repair
  for (NodeState& s : states_) {
    if (!s.active) continue;
    stabilize(s, view_, cfg);
    repair_fingers(s, view_, cfg);
  }

  // (4) gossip
  gossip_outbox_.clear();
  record_outbox_.clear();
  for (const NodeState& s : states_) {
    if (!s.active) continue;
    ++m.active_nodes;
    const std::vector<NodeId> targets =
        options_.baseline_fanout > 0
            ? baseline_targets(s)
            : select_targets(s, view_, cfg, options_.policy, round_).distinct();
    if (targets.empty()) continue;
    auto msg = std::make_shared<const GossipMessage>(make_message(s));
    // Records travel with one round of ttl already spent.
    std::shared_ptr<const RecordTable> records;
    if (!s.dns_records.empty()) {
      RecordTable aged;
      for (const auto& [name, rec] : s.dns_records) {
        if (rec.ttl > 1) {
          DnsRecord r = rec;
          --r.ttl;
          aged.emplace(name, std::move(r));
        }
      }
      if (!aged.empty()) records = std::make_shared<const RecordTable>(std::move(aged));
    }
    for (NodeId t : targets) {
      gossip_outbox_.push_back({index(t), msg});
      if (records) record_outbox_.push_back({index(t), records});
      if (options_.log_messages) {
        Json e = event(seq_, "gossip");
        e["from"] = s.id.value;
        e["to"] = t.value;
        e["msg"] = to_json(*msg);
        emit(std::move(e));
      }
    }
    (options_.baseline_fanout > 0 ? m.baseline_sent : m.gossip_sent) += targets.size();
    if (records) m.record_sent += targets.size();
  }

  // (5) cross-partition detection
  for (NodeState& s : states_) {
    if (s.active) detect_cross_partition(s, view_);
  }

  // (6) merger, against the label snapshot
  std::vector<MergeDecision> decided;
  for (NodeState& s : states_) {
    if (!s.active) continue;
    if (auto d = merger_step(s, view_, round_)) decided.push_back(*d);
  }
  for (const MergeDecision& d : decided) {
    view_.set_partition(d.node, d.target_partition);
    Json e = event(seq_, "merge");
    e["node"] = d.node.value;
    e["from"] = d.old_partition.value;
    e["to"] = d.target_partition.value;
    emit(std::move(e));
    merges_.push_back(d);
  }
  if (!decided.empty()) view_.Rebuild();
  m.merge_decisions = decided.size();

  // (7) ttl
  for (NodeState& s : states_) expire_records(s);

  // (8) metrics and invariants
  m.components = partitions_converged(states_, view_);
  m.violations = checker_.Check(states_, view_, m.components);
  for (const Violation& v : m.violations) {
    Json e = event(seq_, "violation");
    e["invariant"] = v.invariant;
    e["node"] = v.node.value;
    e["detail"] = v.detail;
    emit(std::move(e));
  }
  std::map<NodeId, std::size_t> now_converged;
  for (const ComponentStatus& c : m.components) {
    if (!c.converged) continue;
    now_converged.emplace(c.key, c.size);
    auto prev = converged_.find(c.key);
    if (prev == converged_.end() || prev->second != c.size) {
      Json e = event(seq_, "converged");
      e["component"] = c.key.value;
      e["size"] = c.size;
      e["partition"] = c.partition->value;
      emit(std::move(e));
    }
  }
  converged_ = std::move(now_converged);
  metrics_.push_back(std::move(m));

  ++round_;
  deliver();
  return metrics_.back();
}

void Simulator::deliver() {
  auto order_for = [&](std::size_t count) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (options_.duplicate_delivery) {
      for (std::size_t i = 0; i < count; ++i) {
        if (uniform_below(delivery_rng_, 2) == 1) order.push_back(i);
      }
    }
    if (options_.shuffle_delivery) shuffle(order, delivery_rng_);
    return order;
  };

  std::vector<std::uint64_t> received(states_.size(), 0);
  for (std::size_t k : order_for(gossip_outbox_.size())) {
    const GossipDelivery& d = gossip_outbox_[k];
    NodeState& s = states_[d.to];
    if (!s.active) continue;
    receive_gossip(s, *d.msg, view_, round_);
    ++received[d.to];
  }
  for (std::size_t k : order_for(record_outbox_.size())) {
    const RecordDelivery& d = record_outbox_[k];
    NodeState& s = states_[d.to];
    if (s.active) anti_entropy_records(s, *d.records);
  }
  metrics_.back().max_received =
      received.empty() ? 0 : *std::max_element(received.begin(), received.end());
  gossip_outbox_.clear();
  record_outbox_.clear();
}

bool Simulator::settled() const {
  if (metrics_.empty() || !metrics_.back().all_converged()) return false;
  for (const auto& members : components(view_)) {
    const NodeState& first = states_[index(members.front())];
    for (NodeId id : members) {
      if (!same_hard_state(first, states_[index(id)])) return false;
    }
  }
  return true;
}

Json Simulator::state_json() const {
  Json out;
  out["round"] = round_;
  Json nodes = Json::array();
  for (const NodeState& s : states_) nodes.push_back(to_json(s, view_.active(s.id)));
  out["nodes"] = std::move(nodes);
  Json comps = Json::array();
  for (const ComponentStatus& c : partitions_converged(states_, view_)) {
    Json j;
    j["component"] = c.key.value;
    j["size"] = c.size;
    j["converged"] = c.converged;
    j["partition"] = c.partition ? Json(c.partition->value) : Json(nullptr);
    comps.push_back(std::move(j));
  }
  out["components"] = std::move(comps);
  return out;
}

}  // namespace sgossip
