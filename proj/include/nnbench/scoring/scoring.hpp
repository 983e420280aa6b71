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
#ifndef NNBENCH_SCORING_SCORING_HPP_
#define NNBENCH_SCORING_SCORING_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nnbench/backends/synthetic.hpp"
#include "nnbench/core/types.hpp"

namespace nnbench::scoring {

enum class Category {
  kFp16,
  kInt8,
  kCpuFloat,
  kCpuInt8,
  kFp32,
  kParallel,
  kInitFloat,
  kInitQuant,
};

inline constexpr Category kAllCategories[] = {
    Category::kFp16,     Category::kInt8,      Category::kCpuFloat,
    Category::kCpuInt8,  Category::kFp32,      Category::kParallel,
    Category::kInitFloat, Category::kInitQuant,
};

std::string to_string(Category c);
Category category_from_string(const std::string& s);

// Category of a scored (workload, mode) run; nullopt for the memory test,
// which contributes via the multiplier instead.
std::optional<Category> categorize(const core::WorkloadSpec& workload,
                                   core::InferenceMode mode);

struct ScoreConfig {
  std::map<Category, double> weights;              // percent, sums to 100
  std::map<std::string, double> normalization;     // entry id -> N
  std::map<std::string, double> error_reference;   // test id -> e_ref
  double penalty_exponent = 1.5;
  // (resolution px, factor), ascending; factor of the largest rung <= the
  // achieved resolution applies, top rung factor is 1.
  std::vector<std::pair<int, double>> memory_multiplier_table;
  double scale = 10000.0;
  // test id -> category; init entries derive from the test's category.
  std::map<std::string, Category> categories;

  std::vector<std::string> validate() const;
};

// Init-time score entries use this id, keyed off the timed test's id.
std::string init_entry_id(const std::string& test_id);

// Default weights per category, in percent: {48, 24, 12, 6, 4, 3, 2, 1}.
std::map<Category, double> default_weights();

// {200:0.80 ... 2000:1.00}; gentle monotone ramp, configurable.
std::vector<std::pair<int, double>> default_memory_multiplier_table();

// Shipped defaults: normalization coefficients equal the synthetic
// backend's deterministic latencies under `synthetic`, so the reference
// configuration scores exactly `scale`.
ScoreConfig default_config(const std::vector<core::WorkloadSpec>& suite,
                           const backends::SyntheticConfig& synthetic);
ScoreConfig default_config();

struct ScoreBreakdown {
  std::map<std::string, double> per_test_scores;
  std::map<Category, double> category_scores;
  double memory_multiplier = 1.0;
  double final_score = 0.0;
};

// s = N / (t * penalty), penalty = max(1, l1/e_ref)^p.
double test_score(double t_ms, double l1_error, double normalization,
                  double error_reference, double penalty_exponent);

// Geometric mean of positive scores.
double category_score(const std::vector<double>& scores);

// Factor of the largest table rung <= max_resolution_px; below the
// smallest rung the smallest factor applies.
double memory_multiplier(int max_resolution_px,
                         const std::vector<std::pair<int, double>>& table);

// Full aggregation: per-test scores, category geomeans, memory
// multiplier, A = m * scale * sum_c (w_c/100) * S_c.
ScoreBreakdown final_score(const std::vector<core::TestResult>& results,
                           const ScoreConfig& config);

// Content fingerprint over the canonical JSON form (FNV-1a 64, hex).
std::string config_fingerprint(const ScoreConfig& config);

std::string serialize_config(const ScoreConfig& config);
ScoreConfig parse_config(const std::string& text);
ScoreConfig load_config_file(const std::string& path);

}  // namespace nnbench::scoring

#endif  // NNBENCH_SCORING_SCORING_HPP_
