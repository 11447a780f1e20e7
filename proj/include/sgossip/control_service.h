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

#ifndef SGOSSIP_CONTROL_SERVICE_H_
#define SGOSSIP_CONTROL_SERVICE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "sgossip/json_io.h"
#include "sgossip/scenario.h"
#include "sgossip/simulator.h"

namespace sgossip {

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// HTTP control API over one simulator. All requests are serialized on a
// single mutex, so concurrent /step calls run back to back.
//
//   POST /network {n, m, id_mode, seed, finger_policy} -> 201 {network_id}
//   POST /split   {fragments}                          -> {partition_ids}
//   POST /heal    {partitions: [ids] | "all"}
//   POST /step    {rounds}                             -> {metrics: [...]}
//   POST /publish {node, name, ip, ttl}
//   POST /lookup  {origin, name}                       -> LookupResult
//   GET  /state
//   GET  /events?since=seq                             -> JSON Lines
//
// Bad bodies answer 400 {"error", "field"}; commands before any network
// exists answer 409.
class ControlService {
 public:
  ControlService() = default;
  explicit ControlService(const NetworkSpec& spec, SimOptions options = {});

  HttpResponse handle(std::string_view method, std::string_view path,
                      std::string_view body,
                      const std::map<std::string, std::string>& query = {});

  // Blocks serving HTTP. Returns false if the address cannot be bound.
  bool serve(const std::string& host, int port);

  std::uint64_t network_id() const { return network_id_; }

 private:
  HttpResponse dispatch(std::string_view method, std::string_view path, const Json& body,
                        const std::map<std::string, std::string>& query);
  HttpResponse create_network(const Json& body);

  std::mutex mu_;
  std::unique_ptr<Simulator> sim_;
  std::uint64_t network_id_ = 0;
};

}  // namespace sgossip

#endif  // SGOSSIP_CONTROL_SERVICE_H_
