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

#include "sgossip/control_service.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "httplib.h"

namespace sgossip {

namespace {

constexpr std::uint64_t kMaxStepRounds = 100000;

// Thrown for malformed bodies; carries the offending field.
struct BadRequest : std::runtime_error {
  BadRequest(std::string f, const std::string& msg)
      : std::runtime_error(msg), field(std::move(f)) {}
  std::string field;
};

HttpResponse json_response(int status, const Json& body) {
  return HttpResponse{status, body.dump(), "application/json"};
}

HttpResponse error(int status, std::string_view field, std::string_view message) {
  Json body;
  body["error"] = message;
  body["field"] = field;
  return json_response(status, body);
}

const Json& field(const Json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end()) throw BadRequest(key, "missing field");
  return *it;
}

std::uint64_t as_uint(const Json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw BadRequest(path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::string as_string(const Json& v, const std::string& path) {
  if (!v.is_string()) throw BadRequest(path, "expected a string");
  return v.get<std::string>();
}

Json metrics_row(const RoundMetrics& m) {
  Json j;
  j["round"] = m.round;
  j["gossip_sent"] = m.gossip_sent;
  j["record_sent"] = m.record_sent;
  j["baseline_sent"] = m.baseline_sent;
  j["components"] = m.components.size();
  j["converged"] = m.converged_components();
  j["violations"] = m.violations.size();
  j["merge_decisions"] = m.merge_decisions;
  return j;
}

}  // namespace

ControlService::ControlService(const NetworkSpec& spec, SimOptions options)
    : sim_(std::make_unique<Simulator>(spec, options)), network_id_(1) {}

HttpResponse ControlService::handle(std::string_view method, std::string_view path,
                                    std::string_view body,
                                    const std::map<std::string, std::string>& query) {
  std::lock_guard<std::mutex> lock(mu_);
  Json parsed = Json::object();
  if (method == "POST" && !body.empty()) {
    parsed = Json::parse(body, nullptr, false);
    if (parsed.is_discarded()) return error(400, "", "malformed JSON body");
    if (!parsed.is_object()) return error(400, "", "body must be a JSON object");
  }
  try {
    return dispatch(method, path, parsed, query);
  } catch (const BadRequest& e) {
    return error(400, e.field, e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, "", e.what());
  }
}

HttpResponse ControlService::create_network(const Json& body) {
  NetworkSpec spec;
  spec.n = as_uint(field(body, "n"), "n");
  if (spec.n == 0) throw BadRequest("n", "must be >= 1");
  if (auto it = body.find("id_mode"); it != body.end()) {
    try {
      spec.id_mode = parse_id_mode(as_string(*it, "id_mode"));
    } catch (const std::invalid_argument& e) {
      throw BadRequest("id_mode", e.what());
    }
  }
  if (auto it = body.find("m"); it != body.end()) {
    spec.cfg.m = static_cast<int>(std::min<std::uint64_t>(as_uint(*it, "m"), 64));
  } else if (spec.id_mode == IdMode::kDense) {
    spec.cfg.m = bits_for(spec.n);
  }
  if (auto it = body.find("seed"); it != body.end()) spec.cfg.seed = as_uint(*it, "seed");
  SimOptions options;
  if (auto it = body.find("finger_policy"); it != body.end()) {
    try {
      options.policy = parse_finger_policy(as_string(*it, "finger_policy"));
    } catch (const std::invalid_argument& e) {
      throw BadRequest("finger_policy", e.what());
    }
  }
  try {
    spec.cfg.Validate();
  } catch (const std::invalid_argument& e) {
    throw BadRequest("m", e.what());
  }
  if (spec.n > spec.cfg.ring_size()) throw BadRequest("n", "does not fit in a 2^m ring");
  sim_ = std::make_unique<Simulator>(spec, options);
  ++network_id_;
  Json out;
  out["network_id"] = network_id_;
  return json_response(201, out);
}

HttpResponse ControlService::dispatch(std::string_view method, std::string_view path,
                                      const Json& body,
                                      const std::map<std::string, std::string>& query) {
  if (method == "POST" && path == "/network") return create_network(body);
  if ((method == "GET" && path != "/state" && path != "/events") ||
      (method == "POST" && path != "/split" && path != "/heal" && path != "/step" &&
       path != "/publish" && path != "/lookup") ||
      (method != "GET" && method != "POST")) {
    return error(404, "", "no such endpoint");
  }
  if (!sim_) return error(409, "", "no network; POST /network first");
  Simulator& sim = *sim_;

  if (path == "/state") {
    Json out = sim.state_json();
    out["network_id"] = network_id_;
    return json_response(200, out);
  }
  if (path == "/events") {
    std::uint64_t since = 0;
    if (auto it = query.find("since"); it != query.end()) {
      try {
        std::size_t used = 0;
        since = std::stoull(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        return error(400, "since", "expected a non-negative integer");
      }
    }
    std::string out;
    const auto& log = sim.event_log();
    for (std::size_t i = since; i < log.size(); ++i) {
      out += log[i];
      out += '\n';
    }
    return HttpResponse{200, std::move(out), "application/x-ndjson"};
  }
  if (path == "/split") {
    const Json& frags = field(body, "fragments");
    if (!frags.is_array() || frags.empty()) {
      throw BadRequest("fragments", "expected a non-empty array of node lists");
    }
    std::vector<std::vector<NodeId>> fragments;
    for (std::size_t i = 0; i < frags.size(); ++i) {
      const std::string p = "fragments[" + std::to_string(i) + "]";
      if (!frags[i].is_array() || frags[i].empty()) {
        throw BadRequest(p, "expected a non-empty array of node ids");
      }
      std::vector<NodeId> f;
      for (std::size_t j = 0; j < frags[i].size(); ++j) {
        f.push_back(NodeId{as_uint(frags[i][j], p + "[" + std::to_string(j) + "]")});
      }
      fragments.push_back(std::move(f));
    }
    std::vector<PartitionId> ids;
    try {
      ids = sim.split(fragments);
    } catch (const std::invalid_argument& e) {
      throw BadRequest("fragments", e.what());
    }
    Json out;
    Json list = Json::array();
    for (PartitionId p : ids) list.push_back(p.value);
    out["partition_ids"] = std::move(list);
    return json_response(200, out);
  }
  if (path == "/heal") {
    const Json& parts = field(body, "partitions");
    std::vector<PartitionId> ids;
    if (parts.is_string()) {
      if (parts.get<std::string>() != "all") {
        throw BadRequest("partitions", "expected \"all\" or an array of partition ids");
      }
    } else if (parts.is_array() && parts.size() >= 2) {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        ids.push_back(PartitionId{as_uint(parts[i], "partitions[" + std::to_string(i) + "]")});
      }
    } else {
      throw BadRequest("partitions", "expected \"all\" or at least two partition ids");
    }
    try {
      sim.heal(ids);
    } catch (const std::invalid_argument& e) {
      throw BadRequest("partitions", e.what());
    }
    return json_response(200, Json::object());
  }
  if (path == "/step") {
    const std::uint64_t rounds = as_uint(field(body, "rounds"), "rounds");
    if (rounds == 0 || rounds > kMaxStepRounds) {
      throw BadRequest("rounds", "must be in [1, " + std::to_string(kMaxStepRounds) + "]");
    }
    Json rows = Json::array();
    for (std::uint64_t i = 0; i < rounds; ++i) rows.push_back(metrics_row(sim.step()));
    Json out;
    out["round"] = sim.round();
    out["metrics"] = std::move(rows);
    return json_response(200, out);
  }
  if (path == "/publish") {
    const NodeId node{as_uint(field(body, "node"), "node")};
    const std::string name = as_string(field(body, "name"), "name");
    const std::string ip = as_string(field(body, "ip"), "ip");
    const std::uint64_t ttl = as_uint(field(body, "ttl"), "ttl");
    if (!sim.faults().is_member(node)) throw BadRequest("node", "unknown node");
    if (name.empty()) throw BadRequest("name", "must not be empty");
    if (ttl == 0) throw BadRequest("ttl", "must be >= 1");
    PublishOutcome r;
    try {
      r = sim.publish(node, name, ip, ttl);
    } catch (const std::invalid_argument& e) {
      throw BadRequest("node", e.what());
    }
    Json out;
    out["stored_at"] = r.stored_at.value;
    out["routed"] = r.route.reached;
    out["path"] = to_json(r.route.path);
    out["hops"] = r.route.path.size() - 1;
    out["record"] = to_json(r.record);
    return json_response(200, out);
  }
  // /lookup
  const NodeId origin{as_uint(field(body, "origin"), "origin")};
  const std::string name = as_string(field(body, "name"), "name");
  if (!sim.faults().is_member(origin)) throw BadRequest("origin", "unknown node");
  if (name.empty()) throw BadRequest("name", "must not be empty");
  return json_response(200, to_json(sim.lookup(origin, name)));
}

bool ControlService::serve(const std::string& host, int port) {
  httplib::Server server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const HttpResponse r = handle(req.method, req.path, req.body, query);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get(R"(/.*)", forward);
  server.Post(R"(/.*)", forward);
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  if (!server.bind_to_port(host, port)) return false;
  return server.listen_after_bind();
}

}  // namespace sgossip
