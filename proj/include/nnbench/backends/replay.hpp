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
#ifndef NNBENCH_BACKENDS_REPLAY_HPP_
#define NNBENCH_BACKENDS_REPLAY_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nnbench/backends/backend.hpp"

namespace nnbench::backends {

// Recorded per-inference latencies plus the declared init cost.
struct LatencyTrace {
  std::vector<double> entries_ms;
  double init_ms = 0.0;
};

// Trace file format: first line "init_ms=<value>", then one latency per
// line. '#' comments and blank lines are ignored.
LatencyTrace parse_trace(const std::string& text);
LatencyTrace load_trace_file(const std::string& path);

struct ReplayConfig {
  // Per-workload traces; the empty-string key, when present, is the
  // fallback for workloads without their own entry.
  std::map<std::string, LatencyTrace> traces;
  int max_concurrent_sessions = 2;
};

// Replays recorded latencies. Sessions produce no tensors, so results
// carry no L1 error. Each session consumes its own copy of the trace.
class ReplayBackend : public Backend {
 public:
  explicit ReplayBackend(ReplayConfig config);
  ~ReplayBackend() override;

  const BackendDescriptor& descriptor() const override { return descriptor_; }

  std::unique_ptr<Session> open_session(const core::WorkloadSpec& workload,
                                        core::InferenceMode mode) override;

 private:
  ReplayConfig config_;
  BackendDescriptor descriptor_;
  SessionCounter counter_;
};

}  // namespace nnbench::backends

#endif  // NNBENCH_BACKENDS_REPLAY_HPP_
