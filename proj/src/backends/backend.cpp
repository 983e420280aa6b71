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
#include "nnbench/backends/backend.hpp"

#include "nnbench/error.hpp"

namespace nnbench::backends {

bool BackendDescriptor::supports_op(delegation::OpKind kind,
                                    core::Precision precision) const {
  auto it = supported.find({kind, precision});
  return it != supported.end() && it->second;
}

void fill_supported(BackendDescriptor* descriptor, bool value) {
  for (delegation::OpKind kind : delegation::kAllOpKinds) {
    for (core::Precision precision :
         {core::Precision::kInt8, core::Precision::kFp16,
          core::Precision::kFp32}) {
      descriptor->supported[{kind, precision}] = value;
    }
  }
}

std::unique_ptr<SessionCounter::Ticket> SessionCounter::acquire() {
  int current = active_.load();
  while (true) {
    if (current >= limit_) {
      throw Error(ErrorCode::kSessionLimit,
                  "concurrent session limit reached (" +
                      std::to_string(limit_) + ")");
    }
    if (active_.compare_exchange_weak(current, current + 1)) break;
  }
  return std::make_unique<Ticket>(this);
}

}  // namespace nnbench::backends
