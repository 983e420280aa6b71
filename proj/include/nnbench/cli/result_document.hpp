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
#ifndef NNBENCH_CLI_RESULT_DOCUMENT_HPP_
#define NNBENCH_CLI_RESULT_DOCUMENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nnbench/core/types.hpp"
#include "nnbench/scoring/scoring.hpp"

namespace nnbench::cli {

inline constexpr const char* kSchemaVersion = "1.0";

// One per-test slot in a result document: either a measured result or a
// recorded failure.
struct ResultEntry {
  std::string workload_id;
  core::InferenceMode mode;
  std::optional<core::TestResult> result;
  std::string error;  // non-empty iff the test failed

  bool failed() const { return !error.empty(); }
};

// Canonical machine-readable export. `generated_at` is the only field
// excluded from determinism comparisons and the config fingerprint.
struct ResultDocument {
  std::string schema_version = kSchemaVersion;
  std::string generated_at;
  std::map<std::string, std::string> device_metadata;
  std::string suite_name;
  std::string backend_name;
  std::vector<ResultEntry> entries;
  std::optional<scoring::ScoreBreakdown> score;
  std::string score_error;
  std::string score_config_fingerprint;

  std::vector<core::TestResult> successful_results() const;
};

nlohmann::json document_to_json(const ResultDocument& doc);
ResultDocument document_from_json(const nlohmann::json& j);
ResultDocument load_document_file(const std::string& path);
void write_document_file(const ResultDocument& doc, const std::string& path);

// Structural schema check; empty iff the document validates.
std::vector<std::string> validate_document_json(const nlohmann::json& j);

// Human rendering of the same data (TXT export).
std::string render_document_text(const ResultDocument& doc);
// Delimited per-test rendering (CSV export).
std::string render_document_csv(const ResultDocument& doc);

std::string utc_timestamp_now();

}  // namespace nnbench::cli

#endif  // NNBENCH_CLI_RESULT_DOCUMENT_HPP_
