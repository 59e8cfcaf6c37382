// Copyright 2026 The extractorlab authors
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

#ifndef EXTRACTORLAB_REPORT_HPP
#define EXTRACTORLAB_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "extractorlab/certificate.hpp"

namespace extractorlab {

inline constexpr const char* kReportSchema = "extractorlab/report/v1";

/// One certification / verification run in machine-readable form. The
/// serialized document is canonical (sorted keys, shortest-round-trip
/// numbers), so equal runs produce byte-identical reports; wall time is
/// therefore kept out of the document and surfaced on stderr instead.
struct ExtractorReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t rng_seed = 0;
  std::optional<SpectralCertificate> certificate;
  double epsilon = 0.0;
  double quantum_error_bound = 0.0;
  std::vector<double> trial_errors;
  std::int64_t violations = 0;
  nlohmann::json results = nlohmann::json::object();
  double wall_time_seconds = 0.0;  // stderr only, never serialized

  nlohmann::json to_json() const;
  std::string canonical_text() const;  // to_json() + trailing newline
};

/// Strict schema check: exact top-level key set, typed fields, and an
/// allowlist for parameter keys. Returns the reason a document is rejected,
/// or nothing when it validates.
std::optional<std::string> report_schema_error(const nlohmann::json& doc);

/// Parses and validates; throws std::runtime_error with the schema reason.
ExtractorReport parse_report(const std::string& text);

}  // namespace extractorlab

#endif  // EXTRACTORLAB_REPORT_HPP
