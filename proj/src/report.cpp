// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quditsim/report.hpp"

#include <cmath>

namespace quditsim {

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json doc;
  doc["schema_version"] = report.schema_version;
  doc["tool"] = report.tool;
  doc["version"] = report.version;
  doc["subcommand"] = report.subcommand;
  doc["parameters"] = report.parameters;
  doc["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json(nullptr);
  doc["status"] = report.status == ReportStatus::Ok ? "ok" : "error";
  doc["message"] = report.message;
  doc["payload"] = report.payload;
  return doc;
}

RunReport report_from_json(const nlohmann::json& doc) {
  try {
    RunReport report;
    report.schema_version = doc.at("schema_version").get<int>();
    report.tool = doc.at("tool").get<std::string>();
    report.version = doc.at("version").get<std::string>();
    report.subcommand = doc.at("subcommand").get<std::string>();
    report.parameters = doc.at("parameters");
    const auto& seed = doc.at("seed");
    if (!seed.is_null()) {
      report.seed = seed.get<std::uint64_t>();
    }
    const auto status = doc.at("status").get<std::string>();
    if (status != "ok" && status != "error") {
      throw ParseError("unknown report status '" + status + "'");
    }
    report.status = status == "ok" ? ReportStatus::Ok : ReportStatus::Error;
    report.message = doc.at("message").get<std::string>();
    report.payload = doc.at("payload");
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed run report: ") + e.what());
  }
}

nlohmann::json complex_to_json(cplx z, double snap_below) {
  if (std::abs(z) < snap_below) {
    return nlohmann::json::array({0.0, 0.0});
  }
  return nlohmann::json::array({z.real(), z.imag()});
}

cplx complex_from_json(const nlohmann::json& doc) {
  if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number() || !doc[1].is_number()) {
    throw ParseError("complex numbers are encoded as [re, im]");
  }
  return {doc[0].get<double>(), doc[1].get<double>()};
}

nlohmann::json amplitudes_to_json(std::span<const cplx> amps, double snap_below) {
  nlohmann::json out = nlohmann::json::array();
  for (const cplx& z : amps) {
    out.push_back(complex_to_json(z, snap_below));
  }
  return out;
}

}  // namespace quditsim
