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

#include "extractorlab/report.hpp"

#include <set>

namespace extractorlab {

namespace {

const std::set<std::string> kTopLevelKeys = {
    "schema",      "command",   "parameters", "rng_seed",
    "certificate", "epsilon",   "quantum_error_bound",
    "trial_errors", "violations", "results"};

const std::set<std::string> kParameterKeys = {
    "n", "m", "k", "d", "family", "mode", "trials", "t", "dim_r", "kind"};

const std::set<std::string> kCertificateKeys = {"lambda1_diff", "lambda2_psi",
                                                "balanced"};

const std::set<std::string> kCommands = {"certify",   "verify", "witness",
                                         "shortseed", "design-check",
                                         "entropy"};

bool is_primitive(const nlohmann::json& v) {
  return v.is_number() || v.is_string() || v.is_boolean() || v.is_null();
}

}  // namespace

nlohmann::json ExtractorReport::to_json() const {
  nlohmann::json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = command;
  doc["parameters"] = parameters;
  doc["rng_seed"] = rng_seed;
  if (certificate.has_value()) {
    doc["certificate"] = {{"lambda1_diff", certificate->lambda1_diff},
                          {"lambda2_psi", certificate->lambda2_psi},
                          {"balanced", certificate->balanced}};
  } else {
    doc["certificate"] = nullptr;
  }
  doc["epsilon"] = epsilon;
  doc["quantum_error_bound"] = quantum_error_bound;
  doc["trial_errors"] = trial_errors;
  doc["violations"] = violations;
  doc["results"] = results;
  return doc;
}

std::string ExtractorReport::canonical_text() const {
  return to_json().dump(2) + "\n";
}

std::optional<std::string> report_schema_error(const nlohmann::json& doc) {
  if (!doc.is_object()) return "document must be an object";
  for (const auto& [key, value] : doc.items()) {
    if (!kTopLevelKeys.contains(key)) return "unknown field: " + key;
  }
  for (const auto& key : kTopLevelKeys) {
    if (!doc.contains(key)) return "missing field: " + key;
  }
  if (!doc["schema"].is_string() || doc["schema"] != kReportSchema) {
    return "unsupported schema";
  }
  if (!doc["command"].is_string() ||
      !kCommands.contains(doc["command"].get<std::string>())) {
    return "unknown command";
  }
  if (!doc["parameters"].is_object()) return "parameters must be an object";
  for (const auto& [key, value] : doc["parameters"].items()) {
    if (!kParameterKeys.contains(key)) return "unknown parameter: " + key;
    if (!is_primitive(value)) return "parameter values must be primitive";
  }
  if (!doc["rng_seed"].is_number_unsigned()) {
    return "rng_seed must be a non-negative integer";
  }
  const auto& cert = doc["certificate"];
  if (!cert.is_null()) {
    if (!cert.is_object()) return "certificate must be object or null";
    for (const auto& [key, value] : cert.items()) {
      if (!kCertificateKeys.contains(key)) {
        return "unknown certificate field: " + key;
      }
    }
    for (const auto& key : kCertificateKeys) {
      if (!cert.contains(key)) return "missing certificate field: " + key;
    }
    if (!cert["lambda1_diff"].is_number() || !cert["lambda2_psi"].is_number() ||
        !cert["balanced"].is_boolean()) {
      return "certificate fields mistyped";
    }
  }
  if (!doc["epsilon"].is_number() || !doc["quantum_error_bound"].is_number()) {
    return "bound fields must be numbers";
  }
  if (!doc["trial_errors"].is_array()) return "trial_errors must be an array";
  for (const auto& e : doc["trial_errors"]) {
    if (!e.is_number()) return "trial_errors entries must be numbers";
  }
  if (!doc["violations"].is_number_integer() ||
      doc["violations"].get<std::int64_t>() < 0) {
    return "violations must be a non-negative integer";
  }
  if (!doc["results"].is_object()) return "results must be an object";
  for (const auto& [key, value] : doc["results"].items()) {
    if (is_primitive(value)) continue;
    if (value.is_array()) {
      bool ok = true;
      for (const auto& e : value) ok = ok && is_primitive(e);
      if (ok) continue;
    }
    return "results values must be primitives or primitive arrays";
  }
  return std::nullopt;
}

ExtractorReport parse_report(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("report is not valid JSON: ") +
                             e.what());
  }
  if (const auto err = report_schema_error(doc); err.has_value()) {
    throw std::runtime_error("report rejected: " + *err);
  }
  ExtractorReport rep;
  rep.command = doc["command"].get<std::string>();
  rep.parameters = doc["parameters"];
  rep.rng_seed = doc["rng_seed"].get<std::uint64_t>();
  if (!doc["certificate"].is_null()) {
    SpectralCertificate cert;
    cert.lambda1_diff = doc["certificate"]["lambda1_diff"].get<double>();
    cert.lambda2_psi = doc["certificate"]["lambda2_psi"].get<double>();
    cert.balanced = doc["certificate"]["balanced"].get<bool>();
    rep.certificate = cert;
  }
  rep.epsilon = doc["epsilon"].get<double>();
  rep.quantum_error_bound = doc["quantum_error_bound"].get<double>();
  rep.trial_errors = doc["trial_errors"].get<std::vector<double>>();
  rep.violations = doc["violations"].get<std::int64_t>();
  rep.results = doc["results"];
  return rep;
}

}  // namespace extractorlab
