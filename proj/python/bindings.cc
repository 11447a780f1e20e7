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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>

#include "sgossip/control_service.h"
#include "sgossip/run.h"
#include "sgossip/scenario.h"

namespace py = pybind11;

namespace {

py::dict run_scenario(const std::string& text) {
  sgossip::Scenario scenario;
  try {
    scenario = sgossip::parse_scenario(text);
  } catch (const sgossip::ScenarioError& e) {
    throw py::value_error(e.what());
  }
  sgossip::RunResult result;
  {
    py::gil_scoped_release release;
    result = sgossip::run(scenario);
  }
  py::dict out;
  out["summary"] = sgossip::summary_json(scenario, result).dump();
  out["events"] = result.events;
  out["metrics_csv"] = sgossip::metrics_csv(result.metrics);
  return out;
}

}  // namespace

PYBIND11_MODULE(_sgossip, m) {
  m.doc() = "Structured-gossip CHORD simulator";
  py::class_<sgossip::ControlService>(m, "ControlService")
      .def(py::init<>())
      .def(
          "handle",
          [](sgossip::ControlService& s, const std::string& method, const std::string& path,
             const std::string& body, const std::map<std::string, std::string>& query) {
            sgossip::HttpResponse r;
            {
              py::gil_scoped_release release;
              r = s.handle(method, path, body, query);
            }
            return std::make_tuple(r.status, r.body, r.content_type);
          },
          py::arg("method"), py::arg("path"), py::arg("body") = "",
          py::arg("query") = std::map<std::string, std::string>{})
      .def_property_readonly("network_id", &sgossip::ControlService::network_id);
  m.def("run_scenario", &run_scenario, py::arg("scenario_json"));
}
