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
#ifndef NNBENCH_HARNESS_HARNESS_HPP_
#define NNBENCH_HARNESS_HARNESS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "nnbench/backends/backend.hpp"
#include "nnbench/core/types.hpp"

namespace nnbench::harness {

// Monotonic time source. Simulated backends return their latencies and
// the harness advances the clock by them, so a whole run is replayable
// in virtual time.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual double now_ms() const = 0;
  virtual void advance_ms(double delta_ms) = 0;
};

class ManualClock : public Clock {
 public:
  double now_ms() const override { return now_; }
  void advance_ms(double delta_ms) override { now_ += delta_ms; }

 private:
  double now_ = 0.0;
};

struct RunPlan {
  core::WorkloadSpec workload;
  core::InferenceMode mode;
  std::string backend_name;
  bool sustained_mode = false;
  std::uint64_t seed = 0;
};

struct MemoryLadder {
  std::vector<int> resolutions_px;

  // Endpoints fixed at 200 / 2000 px; intermediate rungs cover the
  // resolutions seen in published device results.
  static MemoryLadder default_ladder();
  std::vector<std::string> validate() const;
};

// Mean / sample std of a latency series under the discard rule: with
// three or more entries the first two are dropped; with one or two the
// last entry is the mean and the std is zero.
std::pair<double, double> aggregate_latencies(
    const std::vector<double>& latencies_ms);

// Mean absolute elementwise difference. Throws on shape mismatch.
double compute_l1(const core::Tensor& target, const core::Tensor& actual);

// Wall time of session open + model preparation, no inference.
double measure_init(const core::WorkloadSpec& workload,
                    core::InferenceMode mode, backends::Backend& backend,
                    Clock& clock);

// The single-session timing protocol: open (init measured separately),
// then single-image inferences until the time limit elapses; the
// inference in flight at expiry completes and is counted.
core::TestResult run_workload(const RunPlan& plan, backends::Backend& backend,
                              Clock& clock);

// Two sessions over the shared time limit; latencies merged in
// completion order before aggregation.
core::TestResult run_parallel(const RunPlan& plan, backends::Backend& backend,
                              Clock& clock);

struct MemoryProbeOutcome {
  int max_resolution_px = 0;
  bool first_rung_failure = false;
  std::vector<double> latencies_ms;  // one per successful rung
};

// Ascends the ladder until out-of-memory or the top rung succeeds.
MemoryProbeOutcome memory_probe(const core::WorkloadSpec& workload,
                                core::InferenceMode mode,
                                backends::Backend& backend,
                                const MemoryLadder& ladder, Clock& clock);

}  // namespace nnbench::harness

#endif  // NNBENCH_HARNESS_HARNESS_HPP_
