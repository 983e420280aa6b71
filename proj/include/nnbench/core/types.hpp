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
#ifndef NNBENCH_CORE_TYPES_HPP_
#define NNBENCH_CORE_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nnbench::core {

enum class Target { kCpu, kAccelerator };
enum class Precision { kInt8, kFp16, kFp32 };

std::string to_string(Target t);
std::string to_string(Precision p);
Target target_from_string(const std::string& s);
Precision precision_from_string(const std::string& s);

// One of the five execution modes: CPU-float (FP16 and FP32 both count as
// "CPU float"), CPU-quantized, and accelerated INT8 / FP16 / FP32.
struct InferenceMode {
  Target target = Target::kCpu;
  Precision precision = Precision::kFp32;

  auto operator<=>(const InferenceMode&) const = default;

  bool is_float() const { return precision != Precision::kInt8; }
  std::string to_string() const;
  static InferenceMode parse(const std::string& s);
};

// One benchmark test: a model, its input geometry, the modes it runs in
// and the measurement time budget.
struct WorkloadSpec {
  std::string id;
  int section = 0;  // 1..11
  std::string task;
  std::string architecture;
  int input_width_px = 0;
  int input_height_px = 0;
  std::int64_t param_count = 0;
  double model_size_mb = 0.0;
  std::set<InferenceMode> supported_modes;
  double time_limit_s = 0.0;
  int parallel_instances = 1;
  bool is_memory_test = false;

  bool operator==(const WorkloadSpec&) const = default;

  std::int64_t pixel_count() const {
    return static_cast<std::int64_t>(input_width_px) * input_height_px;
  }
};

// Measured outcome of one (workload, mode) run.
struct TestResult {
  std::string workload_id;
  InferenceMode mode;
  std::vector<double> latencies_ms;
  double mean_ms = 0.0;
  double std_ms = 0.0;
  double init_ms = 0.0;
  std::optional<double> l1_error;
  int images_processed = 0;
  std::optional<int> max_memory_resolution_px;
  bool first_rung_failure = false;
  bool sustained_mode = false;

  bool operator==(const TestResult&) const = default;
};

// Dense float tensor, row-major. Shape is kept only for the L1 shape
// check; all consumers treat the data as flat.
struct Tensor {
  std::vector<std::int64_t> shape;
  std::vector<float> data;

  static Tensor flat(std::vector<float> values) {
    Tensor t;
    t.shape = {static_cast<std::int64_t>(values.size())};
    t.data = std::move(values);
    return t;
  }
};

}  // namespace nnbench::core

#endif  // NNBENCH_CORE_TYPES_HPP_
