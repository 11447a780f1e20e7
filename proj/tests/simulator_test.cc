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
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "sgossip/run.h"
#include "test_util.h"

namespace sgossip {
namespace {

using testing::Ids;
using testing::Range;

NetworkSpec Dense(std::size_t n, std::uint64_t seed = 1) {
  return NetworkSpec{n, RingConfig{bits_for(n), seed}, IdMode::kDense};
}

NetworkSpec Hashed(std::size_t n, std::uint64_t seed) {
  return NetworkSpec{n, RingConfig{16, seed}, IdMode::kHashed};
}

std::uint64_t StepUntilConverged(Simulator& sim, std::uint64_t limit = 500) {
  while (sim.round() < limit) {
    if (sim.step().all_converged()) return sim.metrics().back().round;
  }
  return limit;
}

TEST(SimulatorTest, SingletonConvergesAtRoundZeroSilently) {
  Simulator sim(Dense(1));
  for (int i = 0; i < 5; ++i) {
    const RoundMetrics& m = sim.step();
    EXPECT_TRUE(m.all_converged());
    EXPECT_EQ(m.gossip_sent + m.record_sent, 0u);
  }
  EXPECT_EQ(convergence_round(sim.metrics(), 0)[0].round, 0u);
}

TEST(SimulatorTest, TwoNodesConvergeWithinTwoRounds) {
  Simulator sim(Dense(2));
  EXPECT_LE(StepUntilConverged(sim), 2u);
}

TEST(SimulatorTest, SixteenNodesConvergeWithinLogSquaredRounds) {
  Simulator sim(Dense(16));
  EXPECT_LE(StepUntilConverged(sim), 16u);
  for (const RoundMetrics& m : sim.metrics()) EXPECT_TRUE(m.violations.empty());
}

TEST(SimulatorTest, StructuredSendBoundAndBaselineExactCount) {
  for (std::size_t n : {16u, 64u, 256u}) {
    Simulator s(Hashed(n, 3));
    SimOptions o;
    o.baseline_fanout = 3;
    Simulator b(Hashed(n, 3), o);
    for (int r = 0; r < 20; ++r) {
      const RoundMetrics& ms = s.step();
      EXPECT_LE(ms.gossip_sent, 2 * ms.active_nodes);
      EXPECT_EQ(ms.baseline_sent, 0u);
      const RoundMetrics& mb = b.step();
      EXPECT_EQ(mb.baseline_sent, 3 * mb.active_nodes);
      EXPECT_EQ(mb.gossip_sent, 0u);
    }
  }
}

TEST(SimulatorTest, BaselineConverges) {
  SimOptions o;
  o.baseline_fanout = 3;
  Simulator sim(Dense(64), o);
  EXPECT_LT(StepUntilConverged(sim), 64u);
}

Scenario SplitHeal(std::uint64_t seed) {
  Scenario s;
  s.network = Hashed(40, seed);
  s.max_rounds = 200;
  s.baseline_fanout = 2;
  const auto ids = assign_node_ids(s.network);
  std::vector<NodeId> a(ids.begin(), ids.begin() + 15), b(ids.begin() + 15, ids.end());
  s.events.push_back({2, PublishEvent{ids[3], "a.example", "10.0.0.1", 500}});
  s.events.push_back({5, SplitEvent{{a, b}}});
  s.events.push_back({6, PublishEvent{ids[30], "a.example", "10.0.0.2", 500}});
  s.events.push_back({7, KillEvent{ids[20]}});
  s.events.push_back({20, ReviveEvent{ids[20]}});
  s.events.push_back({25, HealEvent{}});
  s.events.push_back({60, LookupEvent{ids[0], "a.example"}});
  return s;
}

TEST(SimulatorTest, IdenticalRunsProduceIdenticalLogs) {
  const RunResult a = run(SplitHeal(7));
  const RunResult b = run(SplitHeal(7));
  EXPECT_EQ(a.events, b.events);
  EXPECT_EQ(metrics_csv(a.metrics), metrics_csv(b.metrics));
  EXPECT_EQ(a.merges, b.merges);
  EXPECT_NE(a.events, run(SplitHeal(8)).events);
  EXPECT_EQ(a.violation_count, 0u);
  EXPECT_TRUE(a.all_converged());
}

TEST(SimulatorTest, CommandsMatchScheduledEvents) {
  const Scenario s = SplitHeal(4);
  Simulator scheduled(s.network, options_for(s));
  drive(scheduled, s, 80);

  Simulator manual(s.network, options_for(s));
  std::size_t next = 0;
  while (manual.round() < 80) {
    while (next < s.events.size() && s.events[next].round == manual.round()) {
      manual.apply(s.events[next++].body);
    }
    manual.step();
  }
  EXPECT_EQ(scheduled.event_log(), manual.event_log());
}

TEST(SimulatorTest, OrderInsensitiveFinalState) {
  Scenario s = SplitHeal(11);
  s.baseline_fanout.reset();
  Simulator plain(s.network, options_for(s));
  drive(plain, s, 120);
  for (int variant = 0; variant < 3; ++variant) {
    SimOptions o = options_for(s);
    o.shuffle_delivery = variant != 1;
    o.duplicate_delivery = variant != 0;
    NetworkSpec spec = s.network;
    Simulator other(spec, o);
    drive(other, s, 120);
    ASSERT_TRUE(other.settled());
    for (std::size_t i = 0; i < plain.states().size(); ++i) {
      const NodeState& x = plain.states()[i];
      const NodeState& y = other.states()[i];
      EXPECT_EQ(x.known_nodes, y.known_nodes);
      EXPECT_EQ(x.vv, y.vv);
      EXPECT_EQ(x.partition, y.partition);
      EXPECT_EQ(x.successor, y.successor);
      EXPECT_EQ(x.fingers, y.fingers);
      EXPECT_EQ(x.dns_records, y.dns_records);
    }
  }
}

TEST(SimulatorTest, KillingAPartitionLeavesTheOtherUntouched) {
  auto make = [](bool kill) {
    Simulator sim(Dense(32));
    sim.step();
    sim.split({Range(0, 11), Range(12, 31)});
    if (kill) {
      for (std::uint64_t i = 0; i <= 11; ++i) sim.kill(NodeId{i});
    }
    for (int r = 0; r < 30; ++r) sim.step();
    return sim;
  };
  const Simulator a = make(false);
  const Simulator b = make(true);
  for (std::uint64_t i = 12; i < 32; ++i) {
    EXPECT_EQ(a.state(NodeId{i}), b.state(NodeId{i})) << i;
  }
  for (std::size_t r = 1; r < a.metrics().size(); ++r) {
    EXPECT_EQ(a.metrics()[r].components.back(), b.metrics()[r].components.back());
  }
}

TEST(SimulatorTest, FixtureHealsToPartitionZeroWithOneCycle) {
  Simulator sim(Dense(16));
  for (int i = 0; i < 6; ++i) sim.step();
  sim.split({Range(0, 5), Range(6, 15)});
  for (int i = 0; i < 12; ++i) sim.step();
  const auto& split = sim.metrics().back().components;
  ASSERT_EQ(split.size(), 2u);
  EXPECT_TRUE(split[0].converged && split[1].converged);
  EXPECT_EQ(split[0].partition, PartitionId{0});
  EXPECT_EQ(split[1].partition, PartitionId{6});
  sim.heal({});
  StepUntilConverged(sim);
  std::vector<bool> seen(16, false);
  NodeId cur{0};
  for (int i = 0; i < 16; ++i) {
    EXPECT_EQ(sim.state(cur).partition, PartitionId{0});
    EXPECT_FALSE(seen[cur.value]);
    seen[cur.value] = true;
    cur = sim.state(cur).successor;
  }
  EXPECT_EQ(cur, NodeId{0});
  for (const RoundMetrics& m : sim.metrics()) EXPECT_TRUE(m.violations.empty());
}

TEST(SimulatorTest, LabelsNeverRiseBetweenSplits) {
  Simulator sim(Hashed(60, 2));
  const auto ids = sim.members();
  sim.step();
  std::vector<std::vector<NodeId>> frags(4);
  for (std::size_t i = 0; i < ids.size(); ++i) frags[i % 4].push_back(ids[i]);
  sim.split(frags);
  auto labels = [&] {
    std::vector<PartitionId> out;
    for (const NodeState& s : sim.states()) out.push_back(s.partition);
    return out;
  };
  auto prev = labels();
  sim.heal({PartitionId{frags[2].front().value}, PartitionId{frags[3].front().value}});
  for (int r = 0; r < 40; ++r) {
    if (r == 10) sim.heal({});
    sim.step();
    const auto now = labels();
    for (std::size_t i = 0; i < now.size(); ++i) EXPECT_LE(now[i], prev[i]);
    prev = now;
  }
}

TEST(SimulatorTest, RecordsExpire) {
  Simulator sim(Dense(8));
  for (int i = 0; i < 6; ++i) sim.step();
  sim.publish(NodeId{2}, "short.example", "10.0.0.9", 4);
  EXPECT_EQ(sim.lookup(NodeId{5}, "short.example").outcome, LookupOutcome::kFound);
  for (int i = 0; i < 4; ++i) sim.step();
  for (const NodeState& s : sim.states()) EXPECT_TRUE(s.dns_records.empty());
  EXPECT_EQ(sim.lookup(NodeId{5}, "short.example").outcome, LookupOutcome::kNotFound);
}

TEST(SimulatorTest, BadCommandsHaveNoSideEffects) {
  Simulator sim(Dense(8));
  sim.step();
  const auto log = sim.event_log();
  EXPECT_THROW(sim.split({Range(0, 3), Range(3, 7)}), std::invalid_argument);
  EXPECT_THROW(sim.heal({}), std::invalid_argument);
  EXPECT_THROW(sim.kill(NodeId{42}), std::invalid_argument);
  EXPECT_THROW(sim.revive(NodeId{1}), std::invalid_argument);
  EXPECT_THROW(sim.publish(NodeId{1}, "", "1.2.3.4", 3), std::invalid_argument);
  EXPECT_THROW(sim.lookup(NodeId{99}, "a"), std::invalid_argument);
  sim.kill(NodeId{1});
  EXPECT_THROW(sim.publish(NodeId{1}, "a", "1.2.3.4", 3), std::invalid_argument);
  EXPECT_EQ(sim.event_log().size(), log.size() + 1);
}

TEST(SimulatorTest, KillAndReviveRecover) {
  Simulator sim(Dense(32));
  StepUntilConverged(sim);
  sim.kill(NodeId{9});
  sim.kill(NodeId{10});
  StepUntilConverged(sim);
  EXPECT_EQ(sim.metrics().back().components[0].size, 30u);
  sim.revive(NodeId{9});
  sim.revive(NodeId{10});
  StepUntilConverged(sim);
  EXPECT_EQ(sim.state(NodeId{8}).successor, NodeId{9});
  for (const RoundMetrics& m : sim.metrics()) EXPECT_TRUE(m.violations.empty());
}

TEST(SimulatorTest, StateJsonShape) {
  Simulator sim(Dense(4));
  sim.step();
  const Json j = sim.state_json();
  EXPECT_EQ(j["round"], 1);
  ASSERT_EQ(j["nodes"].size(), 4u);
  const Json& row = j["nodes"][0];
  for (const char* key : {"id", "active", "partition", "successor", "fingers",
                          "crossPartitionLinks", "knownPartitions", "vv"}) {
    EXPECT_TRUE(row.contains(key)) << key;
  }
  EXPECT_TRUE(row["fingers"][0].contains("valid"));
  EXPECT_EQ(j["components"].size(), 1u);
}

TEST(SimulatorTest, MessageLoggingUsesCanonicalShape) {
  SimOptions o;
  o.log_messages = true;
  Simulator sim(Dense(4), o);
  sim.step();
  const Json e = Json::parse(sim.event_log()[1]);
  EXPECT_EQ(e["type"], "gossip");
  EXPECT_EQ(e["msg"].begin().key(), "sender");
  EXPECT_TRUE(e["msg"].contains("partitionVersion"));
}

}  // namespace
}  // namespace sgossip
