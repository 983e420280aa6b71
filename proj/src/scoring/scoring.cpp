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
#include "nnbench/scoring/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nnbench/core/registry.hpp"
#include "nnbench/error.hpp"

namespace nnbench::scoring {

std::string to_string(Category c) {
  switch (c) {
    case Category::kFp16: return "fp16";
    case Category::kInt8: return "int8";
    case Category::kCpuFloat: return "cpu_float";
    case Category::kCpuInt8: return "cpu_int8";
    case Category::kFp32: return "fp32";
    case Category::kParallel: return "parallel";
    case Category::kInitFloat: return "init_float";
    case Category::kInitQuant: return "init_quant";
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown category");
}

Category category_from_string(const std::string& s) {
  for (Category c : kAllCategories) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorCode::kParseError, "unknown category: " + s);
}

std::optional<Category> categorize(const core::WorkloadSpec& workload,
                                   core::InferenceMode mode) {
  if (workload.is_memory_test) return std::nullopt;
  if (workload.parallel_instances == 2) return Category::kParallel;
  if (mode.target == core::Target::kCpu) {
    return mode.precision == core::Precision::kInt8 ? Category::kCpuInt8
                                                    : Category::kCpuFloat;
  }
  switch (mode.precision) {
    case core::Precision::kFp16: return Category::kFp16;
    case core::Precision::kFp32: return Category::kFp32;
    case core::Precision::kInt8: return Category::kInt8;
  }
  return std::nullopt;
}

std::string init_entry_id(const std::string& test_id) {
  return test_id + "/init";
}

std::map<Category, double> default_weights() {
  return {{Category::kFp16, 48.0},     {Category::kInt8, 24.0},
          {Category::kCpuFloat, 12.0}, {Category::kCpuInt8, 6.0},
          {Category::kFp32, 4.0},      {Category::kParallel, 3.0},
          {Category::kInitFloat, 2.0}, {Category::kInitQuant, 1.0}};
}

std::vector<std::pair<int, double>> default_memory_multiplier_table() {
  return {{200, 0.80},  {300, 0.84},  {400, 0.86},  {500, 0.88},
          {600, 0.90},  {800, 0.92},  {1000, 0.94}, {1200, 0.95},
          {1400, 0.96}, {1600, 0.97}, {1800, 0.98}, {2000, 1.00}};
}

ScoreConfig default_config(const std::vector<core::WorkloadSpec>& suite,
                           const backends::SyntheticConfig& synthetic) {
  ScoreConfig config;
  config.weights = default_weights();
  config.memory_multiplier_table = default_memory_multiplier_table();
  for (const auto& w : suite) {
    if (w.is_memory_test) continue;
    auto category = categorize(w, *w.supported_modes.begin());
    if (!category) continue;
    config.categories[w.id] = *category;
    config.normalization[w.id] = backends::synthetic_latency_ms(
        synthetic, w.pixel_count(), w.param_count);
    config.error_reference[w.id] = 0.01;
    if (*category == Category::kFp16 || *category == Category::kFp32 ||
        *category == Category::kInt8) {
      config.normalization[init_entry_id(w.id)] =
          backends::synthetic_init_ms(synthetic, w.model_size_mb);
    }
  }
  return config;
}

ScoreConfig default_config() {
  return default_config(core::registry_default(), backends::SyntheticConfig{});
}

std::vector<std::string> ScoreConfig::validate() const {
  std::vector<std::string> violations;
  double weight_sum = 0.0;
  for (const auto& [c, w] : weights) weight_sum += w;
  if (weight_sum != 100.0) {
    violations.push_back("weights: must sum to exactly 100, got " +
                         std::to_string(weight_sum));
  }
  for (const auto& [id, n] : normalization) {
    if (!(n > 0)) violations.push_back("normalization[" + id + "]: must be > 0");
  }
  for (const auto& [id, e] : error_reference) {
    if (!(e > 0)) {
      violations.push_back("error_reference[" + id + "]: must be > 0");
    }
  }
  if (!(penalty_exponent > 0)) {
    violations.push_back("penalty_exponent: must be > 0");
  }
  if (memory_multiplier_table.empty()) {
    violations.push_back("memory_multiplier_table: must be non-empty");
  } else {
    for (std::size_t i = 0; i < memory_multiplier_table.size(); ++i) {
      auto [px, factor] = memory_multiplier_table[i];
      if (!(factor > 0 && factor <= 1)) {
        violations.push_back("memory_multiplier_table: factors must be in (0,1]");
        break;
      }
      if (i > 0) {
        if (px <= memory_multiplier_table[i - 1].first) {
          violations.push_back(
              "memory_multiplier_table: keys must be ascending");
          break;
        }
        if (factor < memory_multiplier_table[i - 1].second) {
          violations.push_back(
              "memory_multiplier_table: factors must be non-decreasing");
          break;
        }
      }
    }
    if (memory_multiplier_table.back().second != 1.0) {
      violations.push_back("memory_multiplier_table: top rung factor must be 1");
    }
  }
  if (!(scale > 0)) violations.push_back("scale: must be > 0");
  return violations;
}

double test_score(double t_ms, double l1_error, double normalization,
                  double error_reference, double penalty_exponent) {
  if (!(t_ms > 0) || !std::isfinite(t_ms)) {
    throw Error(ErrorCode::kInvalidArgument,
                "test_score: t_ms must be positive and finite");
  }
  if (!std::isfinite(l1_error) || l1_error < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "test_score: l1_error must be finite and >= 0");
  }
  double penalty = 1.0;
  if (l1_error > error_reference) {
    penalty = std::pow(l1_error / error_reference, penalty_exponent);
  }
  return normalization / (t_ms * penalty);
}

double category_score(const std::vector<double>& scores) {
  if (scores.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "category_score: empty list");
  }
  double product = 1.0;
  for (double s : scores) {
    if (!(s > 0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "category_score: non-positive score");
    }
    product *= s;
  }
  return std::pow(product, 1.0 / static_cast<double>(scores.size()));
}

double memory_multiplier(int max_resolution_px,
                         const std::vector<std::pair<int, double>>& table) {
  if (table.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "memory multiplier table empty");
  }
  double factor = table.front().second;
  for (const auto& [px, f] : table) {
    if (px <= max_resolution_px) {
      factor = f;
    } else {
      break;
    }
  }
  return factor;
}

ScoreBreakdown final_score(const std::vector<core::TestResult>& results,
                           const ScoreConfig& config) {
  auto violations = config.validate();
  if (!violations.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid score config: " + violations.front());
  }

  ScoreBreakdown breakdown;
  std::map<Category, std::vector<double>> by_category;
  bool saw_memory = false;

  for (const auto& r : results) {
    if (r.max_memory_resolution_px) {
      breakdown.memory_multiplier = memory_multiplier(
          *r.max_memory_resolution_px, config.memory_multiplier_table);
      saw_memory = true;
      continue;
    }
    auto cat_it = config.categories.find(r.workload_id);
    if (cat_it == config.categories.end()) {
      throw Error(ErrorCode::kMissingEntry,
                  "no category configured for test " + r.workload_id);
    }
    auto norm_it = config.normalization.find(r.workload_id);
    if (norm_it == config.normalization.end()) {
      throw Error(ErrorCode::kMissingEntry,
                  "no normalization coefficient for test " + r.workload_id);
    }
    double l1 = r.l1_error.value_or(0.0);
    double e_ref = 1.0;
    if (l1 > 0) {
      auto ref_it = config.error_reference.find(r.workload_id);
      if (ref_it == config.error_reference.end()) {
        throw Error(ErrorCode::kMissingEntry,
                    "no error reference for test " + r.workload_id);
      }
      e_ref = ref_it->second;
    }
    double s = test_score(r.mean_ms, l1, norm_it->second, e_ref,
                          config.penalty_exponent);
    std::string entry_key = r.workload_id + "@" + r.mode.to_string();
    breakdown.per_test_scores[entry_key] = s;
    by_category[cat_it->second].push_back(s);

    // Float / quantized accelerated tests also feed the init categories.
    Category category = cat_it->second;
    if (category == Category::kFp16 || category == Category::kFp32 ||
        category == Category::kInt8) {
      auto init_it = config.normalization.find(init_entry_id(r.workload_id));
      if (init_it == config.normalization.end()) {
        throw Error(ErrorCode::kMissingEntry,
                    "no normalization coefficient for " +
                        init_entry_id(r.workload_id));
      }
      double s_init = test_score(r.init_ms, 0.0, init_it->second, 1.0,
                                 config.penalty_exponent);
      breakdown.per_test_scores[init_entry_id(entry_key)] = s_init;
      Category init_category = category == Category::kInt8
                                   ? Category::kInitQuant
                                   : Category::kInitFloat;
      by_category[init_category].push_back(s_init);
    }
  }
  if (!saw_memory) breakdown.memory_multiplier = 1.0;

  double weighted_sum = 0.0;
  for (const auto& [category, weight] : config.weights) {
    auto it = by_category.find(category);
    if (it == by_category.end()) {
      throw Error(ErrorCode::kMissingEntry,
                  "scored category has no results: " + to_string(category));
    }
    double s_c = category_score(it->second);
    breakdown.category_scores[category] = s_c;
    weighted_sum += weight * s_c;
  }
  breakdown.final_score =
      breakdown.memory_multiplier * config.scale * (weighted_sum / 100.0);
  return breakdown;
}

std::string serialize_config(const ScoreConfig& config) {
  nlohmann::json j;
  for (const auto& [c, w] : config.weights) j["weights"][to_string(c)] = w;
  j["normalization"] = config.normalization;
  j["error_reference"] = config.error_reference;
  j["penalty_exponent"] = config.penalty_exponent;
  j["memory_multiplier_table"] = nlohmann::json::array();
  for (const auto& [px, f] : config.memory_multiplier_table) {
    j["memory_multiplier_table"].push_back({px, f});
  }
  j["scale"] = config.scale;
  for (const auto& [id, c] : config.categories) {
    j["categories"][id] = to_string(c);
  }
  return j.dump(2) + "\n";
}

ScoreConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("score config does not parse: ") + e.what());
  }
  ScoreConfig config;
  try {
    for (const auto& [name, w] : j.at("weights").items()) {
      config.weights[category_from_string(name)] = w.get<double>();
    }
    config.normalization =
        j.at("normalization").get<std::map<std::string, double>>();
    config.error_reference =
        j.value("error_reference", std::map<std::string, double>{});
    config.penalty_exponent = j.value("penalty_exponent", 1.5);
    for (const auto& entry : j.at("memory_multiplier_table")) {
      config.memory_multiplier_table.emplace_back(entry.at(0).get<int>(),
                                                  entry.at(1).get<double>());
    }
    config.scale = j.value("scale", 10000.0);
    if (j.contains("categories")) {
      for (const auto& [id, name] : j["categories"].items()) {
        config.categories[id] = category_from_string(name.get<std::string>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("score config: bad field: ") + e.what());
  }
  return config;
}

ScoreConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open score config: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_fingerprint(const ScoreConfig& config) {
  std::string canonical = serialize_config(config);
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace nnbench::scoring
