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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sgossip {

bool RunResult::all_converged() const {
  return !convergence.empty() &&
         std::all_of(convergence.begin(), convergence.end(),
                     [](const auto& c) { return c.round.has_value(); });
}

SimOptions options_for(const Scenario& s) {
  SimOptions o;
  o.policy = s.policy;
  o.log_messages = s.log_messages;
  o.shuffle_delivery = s.shuffle_delivery;
  o.duplicate_delivery = s.duplicate_delivery;
  return o;
}

void drive(Simulator& sim, const Scenario& scenario, std::optional<std::uint64_t> rounds) {
  sim.schedule(scenario.events);
  const std::uint64_t limit = rounds.value_or(scenario.max_rounds);
  while (sim.round() < limit) {
    sim.step();
    if (!rounds && scenario.stop_when_settled && !sim.has_pending_events() &&
        sim.settled()) {
      break;
    }
  }
}

RunResult run(const Scenario& scenario) {
  Simulator sim(scenario.network, options_for(scenario));
  drive(sim, scenario);

  RunResult r;
  r.events = sim.event_log();
  r.metrics = sim.metrics();
  r.final_states.assign(sim.states().begin(), sim.states().end());
  r.merges = sim.merge_log();
  r.last_topology_round = sim.last_topology_round();
  r.convergence = convergence_round(r.metrics, r.last_topology_round);
  for (const RoundMetrics& m : r.metrics) r.violation_count += m.violations.size();

  if (scenario.baseline_fanout) {
    const auto base = run_baseline(scenario, *scenario.baseline_fanout, r.metrics.size());
    for (std::size_t i = 0; i < r.metrics.size() && i < base.size(); ++i) {
      r.metrics[i].baseline_sent = base[i].baseline_sent;
    }
  }
  return r;
}

std::vector<RoundMetrics> run_baseline(const Scenario& scenario, std::uint32_t k,
                                       std::optional<std::uint64_t> rounds) {
  if (k == 0) throw std::invalid_argument("baseline fanout must be >= 1");
  SimOptions o = options_for(scenario);
  o.baseline_fanout = k;
  o.log_messages = false;
  Simulator sim(scenario.network, o);
  drive(sim, scenario, rounds);
  return sim.metrics();
}

std::vector<ComponentConvergence> convergence_round(std::span<const RoundMetrics> metrics,
                                                    std::uint64_t last_topology_round) {
  std::vector<ComponentConvergence> out;
  if (metrics.empty()) return out;
  auto find = [](const RoundMetrics& m, NodeId key) -> const ComponentStatus* {
    for (const ComponentStatus& c : m.components) {
      if (c.key == key) return &c;
    }
    return nullptr;
  };
  for (const ComponentStatus& c : metrics.back().components) {
    ComponentConvergence cc{c.key, c.size, c.partition, std::nullopt};
    if (c.converged) {
      std::size_t i = metrics.size();
      while (i > 0 && metrics[i - 1].round >= last_topology_round) {
        const ComponentStatus* prev = find(metrics[i - 1], c.key);
        if (!prev || !prev->converged || prev->size != c.size) break;
        --i;
      }
      if (i < metrics.size()) cc.round = metrics[i].round;
    }
    out.push_back(cc);
  }
  return out;
}

std::string metrics_csv(std::span<const RoundMetrics> metrics) {
  std::ostringstream out;
  out << "round,gossip_sent,record_sent,baseline_sent,components,converged,violations\n";
  for (const RoundMetrics& m : metrics) {
    out << m.round << ',' << m.gossip_sent << ',' << m.record_sent << ','
        << m.baseline_sent << ',' << m.components.size() << ','
        << m.converged_components() << ',' << m.violations.size() << '\n';
  }
  return out.str();
}

Json summary_json(const Scenario& scenario, const RunResult& r) {
  Json out;
  out["n"] = scenario.network.n;
  out["m"] = scenario.network.cfg.m;
  out["seed"] = scenario.network.cfg.seed;
  out["id_mode"] = to_string(scenario.network.id_mode);
  out["finger_policy"] = to_string(scenario.policy);
  out["rounds"] = r.metrics.size();
  out["last_topology_round"] = r.last_topology_round;
  out["converged"] = r.all_converged();
  Json comps = Json::array();
  for (const ComponentConvergence& c : r.convergence) {
    Json j;
    j["component"] = c.component.value;
    j["size"] = c.size;
    j["partition"] = c.partition ? Json(c.partition->value) : Json(nullptr);
    j["convergence_round"] = c.round ? Json(*c.round) : Json(nullptr);
    comps.push_back(std::move(j));
  }
  out["components"] = std::move(comps);
  std::set<std::uint64_t> finals;
  for (const NodeState& s : r.final_states) {
    if (s.active) finals.insert(s.partition.value);
  }
  out["final_partitions"] = finals;
  std::uint64_t gossip = 0, records = 0, baseline = 0, peak = 0;
  for (const RoundMetrics& m : r.metrics) {
    gossip += m.gossip_sent;
    records += m.record_sent;
    baseline += m.baseline_sent;
    peak = std::max(peak, m.gossip_sent);
  }
  out["totals"] = {{"gossip_sent", gossip},
                   {"record_sent", records},
                   {"baseline_sent", baseline},
                   {"max_gossip_per_round", peak},
                   {"merge_decisions", r.merges.size()}};
  out["violations"] = r.violation_count;
  return out;
}

namespace {

struct TrialOutcome {
  std::optional<std::uint64_t> rounds;
  double msgs_per_round = 0;
  std::uint64_t max_msgs = 0;
};

TrialOutcome converge(const NetworkSpec& spec, SimOptions options, std::uint64_t max_rounds) {
  Simulator sim(spec, options);
  while (sim.round() < max_rounds) {
    sim.step();
    if (sim.metrics().back().all_converged()) break;
  }
  TrialOutcome t;
  std::uint64_t total = 0;
  for (const RoundMetrics& m : sim.metrics()) {
    const std::uint64_t sent = m.gossip_sent + m.baseline_sent;
    total += sent;
    t.max_msgs = std::max(t.max_msgs, sent);
  }
  if (!sim.metrics().empty()) {
    t.msgs_per_round = static_cast<double>(total) / sim.metrics().size();
  }
  const auto conv = convergence_round(sim.metrics(), 0);
  if (conv.size() == 1 && conv[0].round) t.rounds = *conv[0].round;
  return t;
}

}  // namespace

SweepResult sweep(const SweepConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (config.sizes.empty()) throw std::invalid_argument("no sizes given");
  for (std::size_t n : config.sizes) {
    if (n < 2) throw std::invalid_argument("sizes must be >= 2");
  }
  SweepResult result;
  for (std::size_t n : config.sizes) {
    for (std::size_t t = 0; t < config.trials; ++t) {
      NetworkSpec spec;
      spec.n = n;
      spec.id_mode = config.id_mode;
      spec.cfg.m = config.id_mode == IdMode::kDense ? bits_for(n)
                                                    : std::max(16, bits_for(n) + 4);
      spec.cfg.seed = config.seed + t;
      SimOptions o;
      o.policy = config.policy;
      const TrialOutcome s = converge(spec, o, config.max_rounds);
      SweepRow row{n, t, spec.cfg.seed, s.rounds, s.msgs_per_round, s.max_msgs,
                   std::nullopt, 0};
      if (config.baseline_fanout > 0) {
        o.baseline_fanout = config.baseline_fanout;
        const TrialOutcome b = converge(spec, o, config.max_rounds);
        row.baseline_rounds = b.rounds;
        row.baseline_msgs_per_round = b.msgs_per_round;
      }
      result.rows.push_back(row);
    }
  }

  std::map<std::size_t, std::pair<double, double>> means;  // n -> (rounds, msgs)
  std::map<std::size_t, std::size_t> counts;
  bool complete = true;
  double constant = 0;
  for (const SweepRow& row : result.rows) {
    if (!row.rounds) {
      complete = false;
      continue;
    }
    auto& [r, msgs] = means[row.n];
    r += static_cast<double>(*row.rounds);
    msgs += row.msgs_per_round;
    ++counts[row.n];
    const double lg = std::ceil(std::log2(static_cast<double>(row.n)));
    constant = std::max(constant, static_cast<double>(*row.rounds) / (lg * lg));
  }
  if (complete) result.rounds_constant = constant;
  if (complete && means.size() >= 2) {
    std::vector<double> logn, r, n, msgs;
    for (const auto& [size, m] : means) {
      logn.push_back(std::log2(static_cast<double>(size)));
      n.push_back(static_cast<double>(size));
      r.push_back(m.first / counts[size]);
      msgs.push_back(m.second / counts[size]);
    }
    result.rounds_vs_log2n_exponent = fit_loglog(logn, r);
    result.msgs_vs_n_exponent = fit_loglog(n, msgs);
  }
  return result;
}

std::optional<double> fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) return std::nullopt;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(x.size());
  const double den = k * sxx - sx * sx;
  if (den == 0) return std::nullopt;
  return (k * sxy - sx * sy) / den;
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "n,trial,seed,rounds,msgs_per_round,max_msgs_per_round,baseline_rounds,"
         "baseline_msgs_per_round\n";
  for (const SweepRow& r : result.rows) {
    out << r.n << ',' << r.trial << ',' << r.seed << ','
        << (r.rounds ? std::to_string(*r.rounds) : "NA") << ',' << r.msgs_per_round
        << ',' << r.max_msgs_per_round << ','
        << (r.baseline_rounds ? std::to_string(*r.baseline_rounds) : "NA") << ','
        << r.baseline_msgs_per_round << '\n';
  }
  return out.str();
}

Json sweep_summary_json(const SweepConfig& config, const SweepResult& result) {
  auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json("N/A"); };
  Json out;
  out["sizes"] = config.sizes;
  out["trials"] = config.trials;
  out["seed"] = config.seed;
  out["id_mode"] = to_string(config.id_mode);
  out["finger_policy"] = to_string(config.policy);
  out["baseline_fanout"] = config.baseline_fanout;
  out["rounds_vs_log2n_exponent"] = opt(result.rounds_vs_log2n_exponent);
  out["msgs_vs_n_exponent"] = opt(result.msgs_vs_n_exponent);
  out["rounds_constant"] = opt(result.rounds_constant);
  bool all = true;
  for (const SweepRow& r : result.rows) all = all && r.rounds.has_value();
  out["all_converged"] = all;
  return out;
}

}  // namespace sgossip
