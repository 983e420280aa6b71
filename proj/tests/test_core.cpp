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
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "nnbench/core/registry.hpp"
#include "nnbench/error.hpp"

using namespace nnbench;
using namespace nnbench::core;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("inference mode round-trips through its string form") {
  for (Target t : {Target::kCpu, Target::kAccelerator}) {
    for (Precision p :
         {Precision::kInt8, Precision::kFp16, Precision::kFp32}) {
      InferenceMode mode{t, p};
      CHECK(InferenceMode::parse(mode.to_string()) == mode);
    }
  }
  CHECK(InferenceMode{Target::kCpu, Precision::kFp16}.to_string() ==
        "cpu/fp16");
  CHECK_THROWS_AS(InferenceMode::parse("gpu/fp16"), Error);
  CHECK_THROWS_AS(InferenceMode::parse("cpu"), Error);
}

TEST_CASE("default registry matches the published suite layout") {
  auto suite = registry_default();
  CHECK(suite.size() == 21);

  const auto& first = suite[0];
  CHECK(first.architecture == "MobileNet-V2");
  CHECK(first.input_width_px == 224);
  CHECK(first.input_height_px == 224);
  CHECK(first.time_limit_s == 20.0);

  // Sections cover 1..11.
  std::set<int> sections;
  for (const auto& w : suite) sections.insert(w.section);
  CHECK(sections == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});

  // The SRGAN section runs on the CPU only.
  int srgan_entries = 0;
  for (const auto& w : suite) {
    if (w.architecture != "SRGAN (ResNet-16)") continue;
    ++srgan_entries;
    for (const auto& m : w.supported_modes) CHECK(m.target == Target::kCpu);
  }
  CHECK(srgan_entries == 2);

  // The memory test is SRCNN based and unique.
  int memory_entries = 0;
  for (const auto& w : suite) {
    if (!w.is_memory_test) continue;
    ++memory_entries;
    CHECK(w.architecture == "SRCNN 9-5-5");
    CHECK(w.section == 11);
  }
  CHECK(memory_entries == 1);

  // Exactly one parallel workload, the segmentation one.
  int parallel_entries = 0;
  for (const auto& w : suite) {
    if (w.parallel_instances == 2) {
      ++parallel_entries;
      CHECK(w.task == "Image Segmentation");
    }
  }
  CHECK(parallel_entries == 1);

  for (const auto& w : suite) {
    CHECK(validate_spec(w).empty());
    CHECK(!w.supported_modes.empty());
  }
}

TEST_CASE("validate_spec reports each violated invariant") {
  auto suite = registry_default();
  WorkloadSpec valid = suite[0];
  CHECK(validate_spec(valid).empty());

  WorkloadSpec bad_limit = valid;
  bad_limit.time_limit_s = 0.0;
  auto report = validate_spec(bad_limit);
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("time_limit_s") != std::string::npos);

  WorkloadSpec bad_parallel = valid;
  bad_parallel.parallel_instances = 3;
  CHECK(validate_spec(bad_parallel).size() == 1);

  WorkloadSpec reserved = valid;
  reserved.parallel_instances = 2;  // not a segmentation workload
  CHECK(validate_spec(reserved).size() == 1);

  WorkloadSpec no_modes = valid;
  no_modes.supported_modes.clear();
  CHECK(validate_spec(no_modes).size() == 1);

  WorkloadSpec bad_res = valid;
  bad_res.input_width_px = 0;
  CHECK(validate_spec(bad_res).size() == 1);
}

TEST_CASE("suite serialization round-trips exactly") {
  auto suite = registry_default();
  std::string text = serialize_suite(suite);
  auto parsed = parse_suite(text);
  CHECK(parsed == suite);
  CHECK(serialize_suite(parsed) == text);
}

TEST_CASE("parse_suite rejects malformed documents") {
  CHECK_THROWS_AS(parse_suite("not json"), Error);
  CHECK_THROWS_AS(parse_suite("{}"), Error);
  // A structurally fine document with an invalid workload fails validation.
  auto suite = registry_default();
  suite[0].time_limit_s = -1.0;
  CHECK_THROWS_AS(parse_suite(serialize_suite(suite)), Error);
}

TEST_CASE("shipped default suite file matches the built-in registry") {
  std::string shipped =
      read_file(std::string(NNBENCH_DATA_DIR) + "/suites/default_suite.json");
  CHECK(shipped == serialize_suite(registry_default()));
}

TEST_CASE("find_workload resolves ids") {
  auto suite = registry_default();
  const auto* w = find_workload(suite, "section04_lstm_cpu_float");
  REQUIRE(w != nullptr);
  CHECK(w->architecture == "LSTM RNN");
  CHECK(find_workload(suite, "no_such_id") == nullptr);
}
