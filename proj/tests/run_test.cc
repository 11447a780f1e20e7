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

#include "sgossip/run.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"

namespace sgossip {
namespace {

RoundMetrics Round(std::uint64_t r, std::vector<ComponentStatus> comps) {
  RoundMetrics m;
  m.round = r;
  m.components = std::move(comps);
  return m;
}

ComponentStatus Comp(std::uint64_t key, bool converged, std::size_t size = 4) {
  return ComponentStatus{NodeId{key}, size, converged,
                         converged ? std::optional(PartitionId{key}) : std::nullopt};
}

TEST(ConvergenceRoundTest, FirstRoundOfFinalStreak) {
  std::vector<RoundMetrics> m{
      Round(0, {Comp(0, false)}), Round(1, {Comp(0, true)}), Round(2, {Comp(0, false)}),
      Round(3, {Comp(0, true)}), Round(4, {Comp(0, true)})};
  auto c = convergence_round(m, 0);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].round, 3u);
  // Not before the last topology event.
  c = convergence_round(m, 4);
  EXPECT_EQ(c[0].round, 4u);
}

TEST(ConvergenceRoundTest, NoneWhenNotConvergedAtEnd) {
  std::vector<RoundMetrics> m{Round(0, {Comp(0, true)}), Round(1, {Comp(0, false)})};
  EXPECT_FALSE(convergence_round(m, 0)[0].round);
}

TEST(ConvergenceRoundTest, PerComponentUnderPermanentSplit) {
  std::vector<RoundMetrics> m{
      Round(5, {Comp(0, false), Comp(6, false)}),
      Round(6, {Comp(0, true), Comp(6, false)}),
      Round(7, {Comp(0, true), Comp(6, true)})};
  const auto c = convergence_round(m, 5);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].round, 6u);
  EXPECT_EQ(c[1].round, 7u);
}

TEST(RunTest, PermanentSplitConvergesComponentWise) {
  Scenario s = parse_scenario(R"({"schema": 1, "n": 16, "events": [
    {"round": 3, "type": "split", "fragments": [[0,1,2,3,4,5],[6,7,8,9,10,11,12,13,14,15]]}]})");
  const RunResult r = run(s);
  ASSERT_EQ(r.convergence.size(), 2u);
  EXPECT_TRUE(r.convergence[0].round && r.convergence[1].round);
  EXPECT_EQ(r.convergence[1].partition, PartitionId{6});
  EXPECT_EQ(r.violation_count, 0u);
}

TEST(RunTest, OneRoundIsNotEnoughForSixtyFour) {
  const RunResult r = run(parse_scenario(R"({"schema": 1, "n": 64, "max_rounds": 1})"));
  EXPECT_EQ(r.metrics.size(), 1u);
  EXPECT_FALSE(r.all_converged());
}

TEST(RunTest, BaselineCompanionCountsKN) {
  const RunResult r =
      run(parse_scenario(R"({"schema": 1, "n": 64, "baseline": {"fanout": 3}})"));
  for (const RoundMetrics& m : r.metrics) EXPECT_EQ(m.baseline_sent, 192u);
  EXPECT_THROW(run_baseline(parse_scenario(R"({"schema": 1, "n": 4})"), 0),
               std::invalid_argument);
}

TEST(RunTest, BaselineRunFollowsRequestedLength) {
  const Scenario s = parse_scenario(R"({"schema": 1, "n": 16})");
  EXPECT_EQ(run_baseline(s, 2, 9).size(), 9u);
}

TEST(MetricsCsvTest, HeaderAndRows) {
  std::vector<RoundMetrics> m{Round(0, {Comp(0, false), Comp(4, true)})};
  m[0].gossip_sent = 7;
  m[0].record_sent = 2;
  m[0].violations.push_back({"I3", NodeId{0}, "x"});
  EXPECT_EQ(metrics_csv(m),
            "round,gossip_sent,record_sent,baseline_sent,components,converged,violations\n"
            "0,7,2,0,2,1,1\n");
}

TEST(SummaryJsonTest, FixtureSummary) {
  const Scenario s = load_scenario(SGOSSIP_SOURCE_DIR "/scenarios/split16.json");
  const Json j = summary_json(s, run(s));
  EXPECT_EQ(j["final_partitions"], Json::array({0}));
  EXPECT_EQ(j["violations"], 0);
  EXPECT_TRUE(j["converged"].get<bool>());
}

TEST(FitTest, RecoversPowerLaw) {
  std::vector<double> x{2, 4, 8, 16}, y;
  for (double v : x) y.push_back(3 * std::pow(v, 1.5));
  EXPECT_NEAR(*fit_loglog(x, y), 1.5, 1e-9);
  EXPECT_FALSE(fit_loglog(std::vector<double>{2}, std::vector<double>{3}));
}

TEST(SweepTest, Validation) {
  SweepConfig c;
  c.sizes = {16};
  c.trials = 0;
  EXPECT_THROW(sweep(c), std::invalid_argument);
  c.trials = 1;
  c.sizes = {1};
  EXPECT_THROW(sweep(c), std::invalid_argument);
}

TEST(SweepTest, SingleSizeHasNoExponents) {
  SweepConfig c;
  c.sizes = {32};
  c.trials = 2;
  const SweepResult r = sweep(c);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_FALSE(r.rounds_vs_log2n_exponent);
  EXPECT_EQ(sweep_summary_json(c, r)["msgs_vs_n_exponent"], "N/A");
  EXPECT_GE(r.rows[0].baseline_msgs_per_round / r.rows[0].msgs_per_round, 1.5);
}

TEST(SweepTest, MessageGapAndExponents) {
  SweepConfig c;
  c.sizes = {16, 64, 256};
  c.trials = 2;
  const SweepResult r = sweep(c);
  for (const SweepRow& row : r.rows) {
    ASSERT_TRUE(row.rounds);
    EXPECT_LE(row.max_msgs_per_round, 2 * row.n);
    EXPECT_GE(row.baseline_msgs_per_round / row.msgs_per_round, 1.5);
  }
  ASSERT_TRUE(r.msgs_vs_n_exponent);
  EXPECT_NEAR(*r.msgs_vs_n_exponent, 1.0, 0.05);
  std::istringstream csv(sweep_csv(r));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header.rfind("n,trial,seed,rounds", 0), 0u);
}

}  // namespace
}  // namespace sgossip
