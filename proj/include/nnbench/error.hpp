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
#ifndef NNBENCH_ERROR_HPP_
#define NNBENCH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nnbench {

enum class ErrorCode {
  kInvalidArgument,
  kUnsupportedMode,
  kSessionLimit,
  kSessionOpenFailed,
  kTraceExhausted,
  kOutOfMemory,
  kShapeMismatch,
  kCyclicGraph,
  kMissingEntry,
  kParseError,
  kIoError,
  kProtocol,
};

// Single exception type for the whole library; the code distinguishes
// error classes that callers need to branch on (e.g. OOM vs everything
// else in the memory probe).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nnbench

#endif  // NNBENCH_ERROR_HPP_
