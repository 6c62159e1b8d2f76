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

#ifndef QUDITSIM_REPORT_HPP
#define QUDITSIM_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "quditsim/config.hpp"

namespace quditsim {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportStatus { Ok, Error };

/// Serializable record of one CLI invocation.
struct RunReport {
  int schema_version = kReportSchemaVersion;
  std::string tool = "quditsim";
  std::string version = QUDITSIM_VERSION;
  std::string subcommand;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  ReportStatus status = ReportStatus::Ok;
  std::string message;
  nlohmann::json payload = nlohmann::json::object();

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json to_json(const RunReport& report);
/// Throws ParseError on a document that is not a RunReport.
RunReport report_from_json(const nlohmann::json& doc);

/// [re, im]. Moduli below `snap_below` are written as [0, 0].
nlohmann::json complex_to_json(cplx z, double snap_below = 0.0);
cplx complex_from_json(const nlohmann::json& doc);
nlohmann::json amplitudes_to_json(std::span<const cplx> amps, double snap_below = 0.0);

}  // namespace quditsim

#endif  // QUDITSIM_REPORT_HPP
