/* Copyright 2026 The nnbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "nnbench/cli/result_document.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "nnbench/error.hpp"

namespace nnbench::cli {

std::vector<core::TestResult> ResultDocument::successful_results() const {
  std::vector<core::TestResult> out;
  for (const auto& e : entries) {
    if (!e.failed() && e.result) out.push_back(*e.result);
  }
  return out;
}

namespace {

nlohmann::json result_to_json(const core::TestResult& r) {
  nlohmann::json j;
  j["workload_id"] = r.workload_id;
  j["mode"] = r.mode.to_string();
  j["latencies_ms"] = r.latencies_ms;
  j["mean_ms"] = r.mean_ms;
  j["std_ms"] = r.std_ms;
  j["init_ms"] = r.init_ms;
  if (r.l1_error) j["l1_error"] = *r.l1_error;
  j["images_processed"] = r.images_processed;
  if (r.max_memory_resolution_px) {
    j["max_memory_resolution_px"] = *r.max_memory_resolution_px;
    j["first_rung_failure"] = r.first_rung_failure;
  }
  j["sustained_mode"] = r.sustained_mode;
  return j;
}

core::TestResult result_from_json(const nlohmann::json& j) {
  core::TestResult r;
  r.workload_id = j.at("workload_id").get<std::string>();
  r.mode = core::InferenceMode::parse(j.at("mode").get<std::string>());
  r.latencies_ms = j.at("latencies_ms").get<std::vector<double>>();
  r.mean_ms = j.at("mean_ms").get<double>();
  r.std_ms = j.at("std_ms").get<double>();
  r.init_ms = j.at("init_ms").get<double>();
  if (j.contains("l1_error")) r.l1_error = j["l1_error"].get<double>();
  r.images_processed = j.at("images_processed").get<int>();
  if (j.contains("max_memory_resolution_px")) {
    r.max_memory_resolution_px = j["max_memory_resolution_px"].get<int>();
    r.first_rung_failure = j.value("first_rung_failure", false);
  }
  r.sustained_mode = j.value("sustained_mode", false);
  return r;
}

nlohmann::json breakdown_to_json(const scoring::ScoreBreakdown& b) {
  nlohmann::json j;
  j["per_test_scores"] = b.per_test_scores;
  for (const auto& [c, s] : b.category_scores) {
    j["category_scores"][scoring::to_string(c)] = s;
  }
  j["memory_multiplier"] = b.memory_multiplier;
  j["final_score"] = b.final_score;
  return j;
}

scoring::ScoreBreakdown breakdown_from_json(const nlohmann::json& j) {
  scoring::ScoreBreakdown b;
  b.per_test_scores =
      j.at("per_test_scores").get<std::map<std::string, double>>();
  for (const auto& [name, s] : j.at("category_scores").items()) {
    b.category_scores[scoring::category_from_string(name)] = s.get<double>();
  }
  b.memory_multiplier = j.at("memory_multiplier").get<double>();
  b.final_score = j.at("final_score").get<double>();
  return b;
}

}  // namespace

nlohmann::json document_to_json(const ResultDocument& doc) {
  nlohmann::json j;
  j["schema_version"] = doc.schema_version;
  j["generated_at"] = doc.generated_at;
  j["device_metadata"] = doc.device_metadata;
  j["suite_name"] = doc.suite_name;
  j["backend_name"] = doc.backend_name;
  j["results"] = nlohmann::json::array();
  for (const auto& e : doc.entries) {
    nlohmann::json entry;
    if (e.failed()) {
      entry["workload_id"] = e.workload_id;
      entry["mode"] = e.mode.to_string();
      entry["error"] = e.error;
    } else {
      entry = result_to_json(*e.result);
    }
    j["results"].push_back(entry);
  }
  if (doc.score) {
    j["score"] = breakdown_to_json(*doc.score);
  } else {
    j["score"] = nullptr;
    if (!doc.score_error.empty()) j["score_error"] = doc.score_error;
  }
  j["score_config_fingerprint"] = doc.score_config_fingerprint;
  return j;
}

ResultDocument document_from_json(const nlohmann::json& j) {
  auto violations = validate_document_json(j);
  if (!violations.empty()) {
    throw Error(ErrorCode::kParseError,
                "invalid result document: " + violations.front());
  }
  ResultDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.generated_at = j.value("generated_at", "");
  doc.device_metadata =
      j.value("device_metadata", std::map<std::string, std::string>{});
  doc.suite_name = j.value("suite_name", "");
  doc.backend_name = j.value("backend_name", "");
  for (const auto& entry : j.at("results")) {
    ResultEntry e;
    e.workload_id = entry.at("workload_id").get<std::string>();
    e.mode = core::InferenceMode::parse(entry.at("mode").get<std::string>());
    if (entry.contains("error")) {
      e.error = entry["error"].get<std::string>();
    } else {
      e.result = result_from_json(entry);
    }
    doc.entries.push_back(std::move(e));
  }
  if (j.contains("score") && !j["score"].is_null()) {
    doc.score = breakdown_from_json(j["score"]);
  }
  doc.score_error = j.value("score_error", "");
  doc.score_config_fingerprint =
      j.value("score_config_fingerprint", std::string{});
  return doc;
}

std::vector<std::string> validate_document_json(const nlohmann::json& j) {
  std::vector<std::string> violations;
  if (!j.is_object()) {
    violations.push_back("document is not a JSON object");
    return violations;
  }
  if (!j.contains("schema_version") || !j["schema_version"].is_string()) {
    violations.push_back("missing schema_version");
  } else if (j["schema_version"].get<std::string>() != kSchemaVersion) {
    violations.push_back("unsupported schema_version " +
                         j["schema_version"].get<std::string>());
  }
  if (!j.contains("results") || !j["results"].is_array()) {
    violations.push_back("missing results array");
    return violations;
  }
  int index = 0;
  for (const auto& entry : j["results"]) {
    std::string where = "results[" + std::to_string(index++) + "]";
    if (!entry.is_object() || !entry.contains("workload_id") ||
        !entry.contains("mode")) {
      violations.push_back(where + ": missing workload_id/mode");
      continue;
    }
    if (entry.contains("error")) continue;
    for (const char* field :
         {"latencies_ms", "mean_ms", "std_ms", "init_ms", "images_processed"}) {
      if (!entry.contains(field)) {
        violations.push_back(where + ": missing " + field);
      }
    }
    if (entry.contains("latencies_ms") && entry.contains("images_processed") &&
        entry["latencies_ms"].is_array() &&
        entry["images_processed"].is_number_integer() &&
        entry["latencies_ms"].size() !=
            entry["images_processed"].get<std::size_t>()) {
      violations.push_back(where +
                           ": images_processed != length(latencies_ms)");
    }
  }
  return violations;
}

ResultDocument load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open result document: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("result document does not parse: ") + e.what());
  }
  return document_from_json(j);
}

void write_document_file(const ResultDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write result document: " + path);
  }
  out << document_to_json(doc).dump(2) << "\n";
  if (!out) {
    throw Error(ErrorCode::kIoError, "write failed: " + path);
  }
}

std::string render_document_text(const ResultDocument& doc) {
  std::ostringstream out;
  out << "nnbench results (schema " << doc.schema_version << ")\n";
  out << "suite:    " << doc.suite_name << "\n";
  out << "backend:  " << doc.backend_name << "\n";
  if (!doc.generated_at.empty()) {
    out << "generated: " << doc.generated_at << "\n";
  }
  out << "\n";
  out << std::left;
  for (const auto& e : doc.entries) {
    out << "  " << std::setw(42) << e.workload_id << " "
        << std::setw(18) << e.mode.to_string();
    if (e.failed()) {
      out << " ERROR: " << e.error << "\n";
      continue;
    }
    const auto& r = *e.result;
    if (r.max_memory_resolution_px) {
      out << " max resolution " << *r.max_memory_resolution_px << " px";
      if (r.first_rung_failure) out << " (failed at first rung)";
      out << "\n";
      continue;
    }
    out << " mean " << std::fixed << std::setprecision(2) << r.mean_ms
        << " ms  std " << r.std_ms << " ms  init " << r.init_ms << " ms  "
        << r.images_processed << " images";
    if (r.l1_error) {
      out << "  L1 " << std::setprecision(6) << *r.l1_error;
    }
    out << std::setprecision(2) << "\n";
  }
  out << "\n";
  if (doc.score) {
    out << "category scores:\n";
    for (const auto& [c, s] : doc.score->category_scores) {
      out << "  " << std::setw(12) << scoring::to_string(c) << " "
          << std::fixed << std::setprecision(4) << s << "\n";
    }
    out << "memory multiplier: " << std::setprecision(2)
        << doc.score->memory_multiplier << "\n";
    out << "final score: " << std::setprecision(1) << doc.score->final_score
        << "\n";
  } else if (!doc.score_error.empty()) {
    out << "score unavailable: " << doc.score_error << "\n";
  }
  return out.str();
}

std::string render_document_csv(const ResultDocument& doc) {
  std::ostringstream out;
  out << "workload_id,mode,mean_ms,std_ms,init_ms,images_processed,l1_error,"
         "max_memory_resolution_px,error\n";
  for (const auto& e : doc.entries) {
    out << e.workload_id << "," << e.mode.to_string() << ",";
    if (e.failed()) {
      out << ",,,,,," << e.error << "\n";
      continue;
    }
    const auto& r = *e.result;
    out << r.mean_ms << "," << r.std_ms << "," << r.init_ms << ","
        << r.images_processed << ",";
    if (r.l1_error) out << *r.l1_error;
    out << ",";
    if (r.max_memory_resolution_px) out << *r.max_memory_resolution_px;
    out << ",\n";
  }
  return out.str();
}

std::string utc_timestamp_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace nnbench::cli
