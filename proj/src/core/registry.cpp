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
#include "nnbench/core/registry.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nnbench/error.hpp"

namespace nnbench::core {

namespace {

constexpr InferenceMode kCpuFp16{Target::kCpu, Precision::kFp16};
constexpr InferenceMode kCpuFp32{Target::kCpu, Precision::kFp32};
constexpr InferenceMode kCpuInt8{Target::kCpu, Precision::kInt8};
constexpr InferenceMode kAccFp16{Target::kAccelerator, Precision::kFp16};
constexpr InferenceMode kAccFp32{Target::kAccelerator, Precision::kFp32};
constexpr InferenceMode kAccInt8{Target::kAccelerator, Precision::kInt8};

struct SectionInfo {
  int section;
  std::string task;
  std::string architecture;
  int width;
  int height;
  std::int64_t params;
  double size_mb;
  double time_limit_s;
};

WorkloadSpec make(const SectionInfo& s, const std::string& id,
                  std::set<InferenceMode> modes, int parallel = 1,
                  bool memory = false) {
  WorkloadSpec w;
  w.id = id;
  w.section = s.section;
  w.task = s.task;
  w.architecture = s.architecture;
  w.input_width_px = s.width;
  w.input_height_px = s.height;
  w.param_count = s.params;
  w.model_size_mb = s.size_mb;
  w.supported_modes = std::move(modes);
  w.time_limit_s = s.time_limit_s;
  w.parallel_instances = parallel;
  w.is_memory_test = memory;
  return w;
}

}  // namespace

std::vector<WorkloadSpec> registry_default() {
  const SectionInfo s1{1, "Image Classification", "MobileNet-V2", 224, 224,
                       3'500'000, 14.0, 20.0};
  const SectionInfo s2{2, "Image Classification", "Inception-V3", 346, 346,
                       27'100'000, 95.0, 30.0};
  const SectionInfo s3{3, "Face Recognition", "Inception-ResNet-V1", 512, 512,
                       22'800'000, 91.0, 30.0};
  const SectionInfo s4{4, "Playing Atari", "LSTM RNN", 84, 84, 3'400'000, 14.0,
                       20.0};
  const SectionInfo s5{5, "Image Deblurring", "SRCNN 9-5-5", 384, 384, 69'000,
                       0.3, 30.0};
  const SectionInfo s6{6, "Image Super-Resolution", "VGG-19 (VDSR)", 256, 256,
                       665'000, 2.7, 30.0};
  const SectionInfo s7{7, "Image Super-Resolution", "SRGAN (ResNet-16)", 512,
                       512, 1'500'000, 6.1, 40.0};
  const SectionInfo s8{8, "Bokeh Simulation", "U-Net", 128, 128, 6'600'000,
                       27.0, 20.0};
  const SectionInfo s9{9, "Image Segmentation", "ICNet", 768, 1152, 6'700'000,
                       27.0, 20.0};
  const SectionInfo s10{10, "Image Enhancement", "DPED (ResNet-4)", 128, 192,
                        400'000, 1.6, 20.0};
  const SectionInfo s11{11, "Memory Test", "SRCNN 9-5-5", 200, 200, 69'000,
                        0.3, 20.0};

  std::vector<WorkloadSpec> suite;
  suite.push_back(make(s1, "section01_mobilenet_v2_cpu_float",
                       {kCpuFp16, kCpuFp32}));
  suite.push_back(make(s1, "section01_mobilenet_v2_nnapi_fp16", {kAccFp16}));
  suite.push_back(make(s1, "section01_mobilenet_v2_nnapi_int8", {kAccInt8}));
  suite.push_back(make(s2, "section02_inception_v3_cpu_float",
                       {kCpuFp16, kCpuFp32}));
  suite.push_back(make(s2, "section02_inception_v3_nnapi_fp16", {kAccFp16}));
  suite.push_back(make(s2, "section02_inception_v3_nnapi_int8", {kAccInt8}));
  suite.push_back(make(s3, "section03_inc_resnet_v1_cpu_int8", {kCpuInt8}));
  suite.push_back(make(s3, "section03_inc_resnet_v1_nnapi_fp16", {kAccFp16}));
  suite.push_back(make(s3, "section03_inc_resnet_v1_nnapi_int8", {kAccInt8}));
  suite.push_back(make(s4, "section04_lstm_cpu_float", {kCpuFp16, kCpuFp32}));
  suite.push_back(make(s5, "section05_srcnn_nnapi_fp16", {kAccFp16}));
  suite.push_back(make(s5, "section05_srcnn_nnapi_int8", {kAccInt8}));
  suite.push_back(make(s6, "section06_vgg19_nnapi_fp16", {kAccFp16}));
  suite.push_back(make(s6, "section06_vgg19_nnapi_int8", {kAccInt8}));
  suite.push_back(make(s7, "section07_srgan_cpu_float",
                       {kCpuFp16, kCpuFp32}));
  suite.push_back(make(s7, "section07_srgan_cpu_int8", {kCpuInt8}));
  suite.push_back(make(s8, "section08_unet_cpu_float", {kCpuFp16, kCpuFp32}));
  suite.push_back(make(s9, "section09_icnet_nnapi_fp32_parallel", {kAccFp32},
                       /*parallel=*/2));
  suite.push_back(make(s10, "section10_dped_nnapi_fp16", {kAccFp16}));
  suite.push_back(make(s10, "section10_dped_nnapi_fp32", {kAccFp32}));
  suite.push_back(make(s11, "section11_srcnn_memory", {kAccFp16},
                       /*parallel=*/1, /*memory=*/true));
  return suite;
}

std::vector<std::string> validate_spec(const WorkloadSpec& spec) {
  std::vector<std::string> violations;
  if (spec.id.empty()) violations.push_back("id: must be non-empty");
  if (spec.section < 1 || spec.section > 11) {
    violations.push_back("section: must be in 1..11");
  }
  if (spec.time_limit_s <= 0) {
    violations.push_back("time_limit_s: must be > 0");
  }
  if (spec.input_width_px <= 0 || spec.input_height_px <= 0) {
    violations.push_back("input_resolution: components must be > 0");
  }
  if (spec.supported_modes.empty()) {
    violations.push_back("supported_modes: must be non-empty");
  }
  if (spec.parallel_instances < 1) {
    violations.push_back("parallel_instances: must be >= 1");
  } else if (spec.parallel_instances > 2) {
    violations.push_back("parallel_instances: must be 1 or 2");
  } else if (spec.parallel_instances == 2 && spec.task != "Image Segmentation") {
    violations.push_back(
        "parallel_instances: 2 is reserved for the segmentation workload");
  }
  if (spec.param_count < 0) violations.push_back("param_count: must be >= 0");
  if (spec.model_size_mb < 0) {
    violations.push_back("model_size_mb: must be >= 0");
  }
  return violations;
}

namespace {

nlohmann::json workload_to_json(const WorkloadSpec& w) {
  nlohmann::json j;
  j["id"] = w.id;
  j["section"] = w.section;
  j["task"] = w.task;
  j["architecture"] = w.architecture;
  j["input_resolution"] = {w.input_width_px, w.input_height_px};
  j["param_count"] = w.param_count;
  j["model_size_mb"] = w.model_size_mb;
  std::vector<std::string> modes;
  for (const auto& m : w.supported_modes) modes.push_back(m.to_string());
  j["supported_modes"] = modes;
  j["time_limit_s"] = w.time_limit_s;
  j["parallel_instances"] = w.parallel_instances;
  j["is_memory_test"] = w.is_memory_test;
  return j;
}

WorkloadSpec workload_from_json(const nlohmann::json& j) {
  WorkloadSpec w;
  try {
    w.id = j.at("id").get<std::string>();
    w.section = j.at("section").get<int>();
    w.task = j.at("task").get<std::string>();
    w.architecture = j.at("architecture").get<std::string>();
    w.input_width_px = j.at("input_resolution").at(0).get<int>();
    w.input_height_px = j.at("input_resolution").at(1).get<int>();
    w.param_count = j.at("param_count").get<std::int64_t>();
    w.model_size_mb = j.at("model_size_mb").get<double>();
    for (const auto& m : j.at("supported_modes")) {
      w.supported_modes.insert(InferenceMode::parse(m.get<std::string>()));
    }
    w.time_limit_s = j.at("time_limit_s").get<double>();
    w.parallel_instances = j.value("parallel_instances", 1);
    w.is_memory_test = j.value("is_memory_test", false);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("bad workload entry: ") + e.what());
  }
  return w;
}

}  // namespace

std::string serialize_suite(const std::vector<WorkloadSpec>& suite,
                            const std::string& suite_name) {
  nlohmann::json j;
  j["suite_name"] = suite_name;
  j["workloads"] = nlohmann::json::array();
  for (const auto& w : suite) j["workloads"].push_back(workload_to_json(w));
  return j.dump(2) + "\n";
}

std::vector<WorkloadSpec> parse_suite(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("suite config does not parse: ") + e.what());
  }
  if (!j.contains("workloads") || !j["workloads"].is_array()) {
    throw Error(ErrorCode::kParseError, "suite config: missing workloads list");
  }
  std::vector<WorkloadSpec> suite;
  for (const auto& entry : j["workloads"]) {
    WorkloadSpec w = workload_from_json(entry);
    auto violations = validate_spec(w);
    if (!violations.empty()) {
      std::ostringstream oss;
      oss << "invalid workload '" << w.id << "':";
      for (const auto& v : violations) oss << " " << v << ";";
      throw Error(ErrorCode::kInvalidArgument, oss.str());
    }
    suite.push_back(std::move(w));
  }
  return suite;
}

std::vector<WorkloadSpec> load_suite_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open suite file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_suite(buf.str());
}

const WorkloadSpec* find_workload(const std::vector<WorkloadSpec>& suite,
                                  const std::string& id) {
  for (const auto& w : suite) {
    if (w.id == id) return &w;
  }
  return nullptr;
}

}  // namespace nnbench::core
