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
#ifndef NNBENCH_CORE_REGISTRY_HPP_
#define NNBENCH_CORE_REGISTRY_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "nnbench/core/types.hpp"

namespace nnbench::core {

// The built-in suite: 11 sections expanded into 21 per-mode test entries.
// CPU float entries carry both FP16 and FP32 modes (one scored test).
std::vector<WorkloadSpec> registry_default();

// Human-readable report of every violated WorkloadSpec invariant.
// Empty iff the spec is valid.
std::vector<std::string> validate_spec(const WorkloadSpec& spec);

// Suite config file round-trip. Canonical form: JSON with sorted keys,
// two-space indent, workloads in listed order.
std::string serialize_suite(const std::vector<WorkloadSpec>& suite,
                            const std::string& suite_name = "default");
std::vector<WorkloadSpec> parse_suite(const std::string& text);
std::vector<WorkloadSpec> load_suite_file(const std::string& path);

const WorkloadSpec* find_workload(const std::vector<WorkloadSpec>& suite,
                                  const std::string& id);

}  // namespace nnbench::core

#endif  // NNBENCH_CORE_REGISTRY_HPP_
