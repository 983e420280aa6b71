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
#include "nnbench/core/types.hpp"

#include "nnbench/error.hpp"

namespace nnbench::core {

std::string to_string(Target t) {
  return t == Target::kCpu ? "cpu" : "accelerator";
}

std::string to_string(Precision p) {
  switch (p) {
    case Precision::kInt8:
      return "int8";
    case Precision::kFp16:
      return "fp16";
    case Precision::kFp32:
      return "fp32";
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown precision");
}

Target target_from_string(const std::string& s) {
  if (s == "cpu") return Target::kCpu;
  if (s == "accelerator") return Target::kAccelerator;
  throw Error(ErrorCode::kParseError, "unknown target: " + s);
}

Precision precision_from_string(const std::string& s) {
  if (s == "int8") return Precision::kInt8;
  if (s == "fp16") return Precision::kFp16;
  if (s == "fp32") return Precision::kFp32;
  throw Error(ErrorCode::kParseError, "unknown precision: " + s);
}

std::string InferenceMode::to_string() const {
  return core::to_string(target) + "/" + core::to_string(precision);
}

InferenceMode InferenceMode::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    throw Error(ErrorCode::kParseError, "bad mode string: " + s);
  }
  return InferenceMode{target_from_string(s.substr(0, slash)),
                       precision_from_string(s.substr(slash + 1))};
}

}  // namespace nnbench::core
