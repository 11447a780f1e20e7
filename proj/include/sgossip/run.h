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

#ifndef SGOSSIP_RUN_H_
#define SGOSSIP_RUN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgossip/json_io.h"
#include "sgossip/scenario.h"
#include "sgossip/simulator.h"

namespace sgossip {

struct ComponentConvergence {
  NodeId component;
  std::size_t size = 0;
  std::optional<PartitionId> partition;
  // First round at or after the last topology event from which the
  // component stays converged to the end of the run.
  std::optional<std::uint64_t> round;
};

struct RunResult {
  std::vector<std::string> events;
  std::vector<RoundMetrics> metrics;
  std::vector<NodeState> final_states;
  std::vector<MergeDecision> merges;
  std::vector<ComponentConvergence> convergence;
  std::uint64_t last_topology_round = 0;
  std::size_t violation_count = 0;

  bool all_converged() const;
};

SimOptions options_for(const Scenario& scenario);

// Runs the structured protocol. With a baseline configured, a fanout-k run
// over the same schedule and round count fills in baseline_sent.
RunResult run(const Scenario& scenario);

// Fanout-k epidemic over the same schedule. Runs exactly `rounds` rounds
// when given, otherwise follows the scenario's stopping rule. Throws
// std::invalid_argument for k == 0.
std::vector<RoundMetrics> run_baseline(const Scenario& scenario, std::uint32_t k,
                                       std::optional<std::uint64_t> rounds = {});

// Drives an already-constructed simulator through the scenario's rounds.
void drive(Simulator& sim, const Scenario& scenario,
           std::optional<std::uint64_t> rounds = {});

std::vector<ComponentConvergence> convergence_round(std::span<const RoundMetrics> metrics,
                                                    std::uint64_t last_topology_round);

std::string metrics_csv(std::span<const RoundMetrics> metrics);

Json summary_json(const Scenario& scenario, const RunResult& result);

struct SweepConfig {
  std::vector<std::size_t> sizes;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  std::uint32_t baseline_fanout = 3;
  IdMode id_mode = IdMode::kHashed;
  FingerPolicy policy = FingerPolicy::kRotating;
  std::uint64_t max_rounds = 2048;
};

struct SweepRow {
  std::size_t n = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> rounds;
  double msgs_per_round = 0;
  std::uint64_t max_msgs_per_round = 0;
  std::optional<std::uint64_t> baseline_rounds;
  double baseline_msgs_per_round = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  // Least-squares slopes; empty with fewer than two sizes.
  std::optional<double> rounds_vs_log2n_exponent;
  std::optional<double> msgs_vs_n_exponent;
  std::optional<double> rounds_constant;  // max r / ceil(log2 n)^2
};

// Each trial converges a fresh network with no events. Throws
// std::invalid_argument on sizes < 2 or trials == 0.
SweepResult sweep(const SweepConfig& config);

std::string sweep_csv(const SweepResult& result);
Json sweep_summary_json(const SweepConfig& config, const SweepResult& result);

// Slope of the least-squares line through (log x, log y).
std::optional<double> fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace sgossip

#endif  // SGOSSIP_RUN_H_
