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
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "nnbench/core/registry.hpp"
#include "nnbench/error.hpp"
#include "nnbench/scoring/scoring.hpp"

using namespace nnbench;
using namespace nnbench::scoring;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Reference results: every latency equals its normalization coefficient,
// zero error, full memory pass.
std::vector<core::TestResult> fixed_point_results(const ScoreConfig& config) {
  std::vector<core::TestResult> results;
  for (const auto& [id, category] : config.categories) {
    core::TestResult r;
    r.workload_id = id;
    r.mean_ms = config.normalization.at(id);
    r.init_ms = config.normalization.count(init_entry_id(id))
                    ? config.normalization.at(init_entry_id(id))
                    : 1.0;
    results.push_back(r);
  }
  core::TestResult memory;
  memory.workload_id = "memory";
  memory.max_memory_resolution_px = 2000;
  results.push_back(memory);
  return results;
}

}  // namespace

TEST_CASE("default weights reproduce the published category split") {
  auto weights = default_weights();
  CHECK(weights.at(Category::kFp16) == 48.0);
  CHECK(weights.at(Category::kInt8) == 24.0);
  CHECK(weights.at(Category::kCpuFloat) == 12.0);
  CHECK(weights.at(Category::kCpuInt8) == 6.0);
  CHECK(weights.at(Category::kFp32) == 4.0);
  CHECK(weights.at(Category::kParallel) == 3.0);
  CHECK(weights.at(Category::kInitFloat) == 2.0);
  CHECK(weights.at(Category::kInitQuant) == 1.0);
  double sum = 0.0;
  for (const auto& [c, w] : weights) sum += w;
  CHECK(sum == 100.0);
}

TEST_CASE("test_score applies the ratio penalty with floor 1") {
  // At the reference error the penalty is exactly 1.
  CHECK(test_score(100.0, 0.01, 1000.0, 0.01, 1.5) == 10.0);
  // Four times the reference: 4^1.5 = 8.
  CHECK(test_score(100.0, 0.04, 1000.0, 0.01, 1.5) ==
        doctest::Approx(1.25).epsilon(1e-12));
  // Zero error clamps at the floor.
  CHECK(test_score(100.0, 0.0, 1000.0, 0.01, 1.5) == 10.0);

  CHECK_THROWS_AS(test_score(0.0, 0.0, 1.0, 1.0, 1.5), Error);
  CHECK_THROWS_AS(test_score(-3.0, 0.0, 1.0, 1.0, 1.5), Error);
  CHECK_THROWS_AS(test_score(1.0, -0.5, 1.0, 1.0, 1.5), Error);
}

TEST_CASE("penalty factors at canonical error ratios") {
  // s = N / (t * penalty) with N = t = e_ref = 1 isolates the penalty.
  double p1 = 1.0 / test_score(1.0, 1.0, 1.0, 1.0, 1.5);
  double p2 = 1.0 / test_score(1.0, 2.0, 1.0, 1.0, 1.5);
  double p4 = 1.0 / test_score(1.0, 4.0, 1.0, 1.0, 1.5);
  CHECK(std::abs(p1 - 1.0) < 1e-12);
  CHECK(std::abs(p2 - 2.8284271247461903) < 1e-12);
  CHECK(std::abs(p4 - 8.0) < 1e-12);
}

TEST_CASE("category_score is a geometric mean") {
  CHECK(category_score({4.0, 16.0}) == 8.0);
  CHECK(category_score({3.75}) == 3.75);
  CHECK_THROWS_AS(category_score({}), Error);
  CHECK_THROWS_AS(category_score({1.0, 0.0}), Error);
  CHECK_THROWS_AS(category_score({1.0, -2.0}), Error);

  // Random lists against a log-domain oracle.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.01, 1000.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> scores(1 + rng() % 12);
    double log_sum = 0.0;
    for (auto& s : scores) {
      s = dist(rng);
      log_sum += std::log(s);
    }
    double oracle = std::exp(log_sum / static_cast<double>(scores.size()));
    CHECK(category_score(scores) == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("memory_multiplier looks up the largest rung at or below") {
  auto table = default_memory_multiplier_table();
  CHECK(memory_multiplier(2000, table) == 1.0);
  CHECK(memory_multiplier(1000, table) == 0.94);
  CHECK(memory_multiplier(999, table) == 0.92);
  CHECK(memory_multiplier(1350, table) == 0.95);
  CHECK(memory_multiplier(0, table) == 0.80);
  CHECK(memory_multiplier(5000, table) == 1.0);
  CHECK_THROWS_AS(memory_multiplier(100, {}), Error);
}

TEST_CASE("categorize follows the category taxonomy") {
  auto suite = core::registry_default();
  auto mode = [](const char* s) { return core::InferenceMode::parse(s); };
  auto get = [&](const std::string& id) {
    return *core::find_workload(suite, id);
  };
  CHECK(*categorize(get("section01_mobilenet_v2_cpu_float"), mode("cpu/fp32")) ==
        Category::kCpuFloat);
  CHECK(*categorize(get("section01_mobilenet_v2_cpu_float"), mode("cpu/fp16")) ==
        Category::kCpuFloat);
  CHECK(*categorize(get("section07_srgan_cpu_int8"), mode("cpu/int8")) ==
        Category::kCpuInt8);
  CHECK(*categorize(get("section01_mobilenet_v2_nnapi_fp16"),
                    mode("accelerator/fp16")) == Category::kFp16);
  CHECK(*categorize(get("section10_dped_nnapi_fp32"),
                    mode("accelerator/fp32")) == Category::kFp32);
  CHECK(*categorize(get("section05_srcnn_nnapi_int8"),
                    mode("accelerator/int8")) == Category::kInt8);
  CHECK(*categorize(get("section09_icnet_nnapi_fp32_parallel"),
                    mode("accelerator/fp32")) == Category::kParallel);
  CHECK(!categorize(get("section11_srcnn_memory"), mode("accelerator/fp16")));
}

TEST_CASE("score config validation") {
  ScoreConfig config = default_config();
  CHECK(config.validate().empty());

  ScoreConfig bad_weights = config;
  bad_weights.weights[Category::kFp16] = 47.0;  // sums to 99
  CHECK(!bad_weights.validate().empty());

  ScoreConfig bad_norm = config;
  bad_norm.normalization["x"] = 0.0;
  CHECK(!bad_norm.validate().empty());

  ScoreConfig bad_table = config;
  bad_table.memory_multiplier_table.back().second = 0.99;  // top rung != 1
  CHECK(!bad_table.validate().empty());

  ScoreConfig unordered = config;
  std::swap(unordered.memory_multiplier_table[0],
            unordered.memory_multiplier_table[1]);
  CHECK(!unordered.validate().empty());
}

TEST_CASE("final_score fixed point: reference latencies give exactly scale") {
  ScoreConfig config = default_config();
  config.scale = 100.0;
  auto results = fixed_point_results(config);
  auto breakdown = final_score(results, config);
  CHECK(breakdown.final_score == 100.0);
  CHECK(breakdown.memory_multiplier == 1.0);
  for (const auto& [c, s] : breakdown.category_scores) CHECK(s == 1.0);
  for (const auto& [id, s] : breakdown.per_test_scores) CHECK(s == 1.0);
}

TEST_CASE("final_score is homogeneous of degree -1 in latency") {
  ScoreConfig config = default_config();
  auto results = fixed_point_results(config);
  double base = final_score(results, config).final_score;

  auto doubled = results;
  for (auto& r : doubled) {
    r.mean_ms *= 2.0;
    r.init_ms *= 2.0;
  }
  double halved = final_score(doubled, config).final_score;
  CHECK(halved == doctest::Approx(base / 2.0).epsilon(1e-12));
}

TEST_CASE("final_score is monotone in latency, error and memory") {
  ScoreConfig config = default_config();
  auto results = fixed_point_results(config);
  double base = final_score(results, config).final_score;

  auto slower = results;
  slower[0].mean_ms *= 1.5;
  CHECK(final_score(slower, config).final_score < base);

  auto lossy = results;
  lossy[0].l1_error = 10.0 * config.error_reference.at(lossy[0].workload_id);
  CHECK(final_score(lossy, config).final_score < base);

  auto cramped = results;
  for (auto& r : cramped) {
    if (r.max_memory_resolution_px) r.max_memory_resolution_px = 400;
  }
  CHECK(final_score(cramped, config).final_score < base);
}

TEST_CASE("final_score matches an independent spreadsheet-style recomputation") {
  ScoreConfig config = default_config();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> jitter(0.5, 2.0);
  auto results = fixed_point_results(config);
  for (auto& r : results) {
    r.mean_ms *= jitter(rng);
    r.init_ms *= jitter(rng);
  }
  results.back().max_memory_resolution_px = 1200;

  auto breakdown = final_score(results, config);

  // Independent recomputation in the log domain.
  std::map<Category, std::vector<double>> buckets;
  double multiplier = 1.0;
  for (const auto& r : results) {
    if (r.max_memory_resolution_px) {
      for (const auto& [px, f] : config.memory_multiplier_table) {
        if (px <= *r.max_memory_resolution_px) multiplier = f;
      }
      continue;
    }
    Category c = config.categories.at(r.workload_id);
    buckets[c].push_back(config.normalization.at(r.workload_id) / r.mean_ms);
    if (c == Category::kFp16 || c == Category::kFp32 || c == Category::kInt8) {
      double init_score =
          config.normalization.at(init_entry_id(r.workload_id)) / r.init_ms;
      buckets[c == Category::kInt8 ? Category::kInitQuant
                                   : Category::kInitFloat]
          .push_back(init_score);
    }
  }
  double weighted = 0.0;
  for (const auto& [c, scores] : buckets) {
    double log_sum = 0.0;
    for (double s : scores) log_sum += std::log(s);
    weighted += config.weights.at(c) *
                std::exp(log_sum / static_cast<double>(scores.size()));
  }
  double oracle = multiplier * config.scale * weighted / 100.0;
  CHECK(breakdown.final_score == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("final_score names missing entries") {
  ScoreConfig config = default_config();
  core::TestResult stray;
  stray.workload_id = "not_in_config";
  stray.mean_ms = 10.0;
  try {
    final_score({stray}, config);
    FAIL("expected missing entry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMissingEntry);
    CHECK(std::string(e.what()).find("not_in_config") != std::string::npos);
  }
}

TEST_CASE("score config serialization round-trips and fingerprints") {
  ScoreConfig config = default_config();
  std::string text = serialize_config(config);
  ScoreConfig parsed = parse_config(text);
  CHECK(serialize_config(parsed) == text);
  CHECK(config_fingerprint(parsed) == config_fingerprint(config));

  ScoreConfig tweaked = config;
  tweaked.normalization.begin()->second *= 1.0000001;
  CHECK(config_fingerprint(tweaked) != config_fingerprint(config));

  CHECK_THROWS_AS(parse_config("nonsense"), Error);
  CHECK_THROWS_AS(parse_config("{}"), Error);
}

TEST_CASE("shipped default score config matches the computed defaults") {
  std::string shipped = read_file(std::string(NNBENCH_DATA_DIR) +
                                  "/score/default_score_config.json");
  CHECK(shipped == serialize_config(default_config()));
}

TEST_CASE("category names round-trip") {
  for (Category c : kAllCategories) {
    CHECK(category_from_string(to_string(c)) == c);
  }
  CHECK_THROWS_AS(category_from_string("warp"), Error);
}
