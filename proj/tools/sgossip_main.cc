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

// Command line front end: run a scenario, sweep network sizes, or serve the
// control API.
//
// Exit codes: 0 ok, 1 environment (I/O, bind), 2 invalid input,
// 3 no convergence within max_rounds, 4 invariant violations.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgossip/control_service.h"
#include "sgossip/run.h"
#include "sgossip/scenario.h"

namespace {

constexpr int kOk = 0;
constexpr int kEnvironment = 1;
constexpr int kInvalid = 2;
constexpr int kNotConverged = 3;
constexpr int kViolations = 4;

namespace fs = std::filesystem;

bool write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

bool prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  return !ec;
}

int cmd_run(const std::string& path, std::optional<std::uint64_t> seed,
            const std::string& out_dir) {
  sgossip::Scenario scenario;
  try {
    scenario = sgossip::load_scenario(path);
    if (seed) {
      scenario.network.cfg.seed = *seed;
      sgossip::validate_scenario(scenario);
    }
  } catch (const sgossip::ScenarioError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kEnvironment;
  }

  const sgossip::RunResult result = sgossip::run(scenario);
  const sgossip::Json summary = sgossip::summary_json(scenario, result);

  const fs::path dir(out_dir);
  std::string events;
  for (const std::string& line : result.events) events += line + "\n";
  if (!prepare_dir(dir) || !write_file(dir / "events.jsonl", events) ||
      !write_file(dir / "metrics.csv", sgossip::metrics_csv(result.metrics)) ||
      !write_file(dir / "summary.json", summary.dump(2) + "\n")) {
    std::cerr << "cannot write to " << out_dir << "\n";
    return kEnvironment;
  }
  std::cout << summary.dump(2) << "\n";
  if (result.violation_count > 0) return kViolations;
  if (!result.all_converged()) return kNotConverged;
  return kOk;
}

int cmd_sweep(const sgossip::SweepConfig& config, const std::string& out_dir) {
  sgossip::SweepResult result;
  try {
    result = sgossip::sweep(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  }
  const sgossip::Json summary = sgossip::sweep_summary_json(config, result);
  const fs::path dir(out_dir);
  if (!prepare_dir(dir) || !write_file(dir / "sweep.csv", sgossip::sweep_csv(result)) ||
      !write_file(dir / "summary.json", summary.dump(2) + "\n")) {
    std::cerr << "cannot write to " << out_dir << "\n";
    return kEnvironment;
  }
  std::cout << summary.dump(2) << "\n";
  return summary["all_converged"].get<bool>() ? kOk : kNotConverged;
}

int cmd_serve(const std::string& scenario_path, std::optional<std::size_t> n,
              std::optional<std::uint64_t> seed, const std::string& host, int port) {
  auto service = std::make_unique<sgossip::ControlService>();
  if (!scenario_path.empty() || n) {
    sgossip::Scenario scenario;
    try {
      if (!scenario_path.empty()) {
        scenario = sgossip::load_scenario(scenario_path);
      } else {
        scenario.network.n = *n;
        scenario.network.cfg.m = sgossip::bits_for(*n);
      }
      if (seed) scenario.network.cfg.seed = *seed;
      sgossip::assign_node_ids(scenario.network);
    } catch (const sgossip::ScenarioError& e) {
      std::cerr << e.what() << "\n";
      return kInvalid;
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return kInvalid;
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return kEnvironment;
    }
    service = std::make_unique<sgossip::ControlService>(scenario.network,
                                                        sgossip::options_for(scenario));
  }
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!service->serve(host, port)) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return kEnvironment;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured-gossip CHORD simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("scenario", scenario_path, "Scenario JSON")->required();
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--out", out_dir, "Output directory");

  sgossip::SweepConfig sweep;
  sweep.sizes = {16, 64, 256, 1024};
  std::string id_mode = "hashed";
  std::string policy = "rotating";
  auto* sw = app.add_subcommand("sweep", "Convergence and message scaling sweep");
  sw->add_option("--sizes", sweep.sizes, "Network sizes")->delimiter(',');
  sw->add_option("--trials", sweep.trials, "Trials per size");
  sw->add_option("--seed", sweep.seed, "Base seed; trial t uses seed + t");
  sw->add_option("--fanout", sweep.baseline_fanout, "Baseline fanout (0 disables)");
  sw->add_option("--id-mode", id_mode, "dense or hashed");
  sw->add_option("--finger-policy", policy, "rotating or furthest");
  sw->add_option("--max-rounds", sweep.max_rounds, "Round limit per trial");
  sw->add_option("--out", out_dir, "Output directory");

  std::optional<std::size_t> serve_n;
  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Serve the HTTP control API");
  serve->add_option("--scenario", scenario_path, "Initial network from a scenario file");
  serve->add_option("--n", serve_n, "Initial dense network of n nodes");
  serve->add_option("--seed", seed, "Seed for the initial network");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Bind port");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  if (*run) return cmd_run(scenario_path, seed, out_dir);
  if (*sw) {
    try {
      sweep.id_mode = sgossip::parse_id_mode(id_mode);
      sweep.policy = sgossip::parse_finger_policy(policy);
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return kInvalid;
    }
    return cmd_sweep(sweep, out_dir);
  }
  return cmd_serve(scenario_path, serve_n, seed, host, port);
}
