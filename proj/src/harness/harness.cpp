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
#include "nnbench/harness/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "nnbench/error.hpp"

namespace nnbench::harness {

namespace {

void check_plan(const RunPlan& plan) {
  if (!plan.workload.supported_modes.count(plan.mode)) {
    throw Error(ErrorCode::kUnsupportedMode,
                "mode " + plan.mode.to_string() +
                    " not supported by workload " + plan.workload.id);
  }
}

core::TestResult finish_result(const RunPlan& plan,
                               std::vector<double> latencies, double init_ms,
                               double l1_sum, int l1_count) {
  core::TestResult result;
  result.workload_id = plan.workload.id;
  result.mode = plan.mode;
  result.init_ms = init_ms;
  result.sustained_mode = plan.sustained_mode;
  if (latencies.empty()) {
    throw Error(ErrorCode::kProtocol,
                "no inference completed within the time limit for " +
                    plan.workload.id);
  }
  auto [mean, std] = aggregate_latencies(latencies);
  result.mean_ms = mean;
  result.std_ms = std;
  result.images_processed = static_cast<int>(latencies.size());
  result.latencies_ms = std::move(latencies);
  if (l1_count > 0) result.l1_error = l1_sum / l1_count;
  return result;
}

}  // namespace

MemoryLadder MemoryLadder::default_ladder() {
  return MemoryLadder{{200, 300, 400, 500, 600, 800, 1000, 1200, 1400, 1600,
                       1800, 2000}};
}

std::vector<std::string> MemoryLadder::validate() const {
  std::vector<std::string> violations;
  if (resolutions_px.empty()) {
    violations.push_back("resolutions_px: must be non-empty");
    return violations;
  }
  for (std::size_t i = 1; i < resolutions_px.size(); ++i) {
    if (resolutions_px[i] <= resolutions_px[i - 1]) {
      violations.push_back("resolutions_px: must be strictly ascending");
      break;
    }
  }
  if (resolutions_px.front() < 200) {
    violations.push_back("resolutions_px: first rung must be >= 200");
  }
  if (resolutions_px.back() > 2000) {
    violations.push_back("resolutions_px: last rung must be <= 2000");
  }
  return violations;
}

std::pair<double, double> aggregate_latencies(
    const std::vector<double>& latencies_ms) {
  if (latencies_ms.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "aggregate_latencies: empty latency list");
  }
  if (latencies_ms.size() <= 2) {
    return {latencies_ms.back(), 0.0};
  }
  const std::size_t n = latencies_ms.size() - 2;
  double sum = 0.0;
  for (std::size_t i = 2; i < latencies_ms.size(); ++i) sum += latencies_ms[i];
  double mean = sum / static_cast<double>(n);
  double var = 0.0;
  if (n > 1) {
    for (std::size_t i = 2; i < latencies_ms.size(); ++i) {
      double d = latencies_ms[i] - mean;
      var += d * d;
    }
    var /= static_cast<double>(n - 1);
  }
  return {mean, std::sqrt(var)};
}

double compute_l1(const core::Tensor& target, const core::Tensor& actual) {
  if (target.shape != actual.shape) {
    throw Error(ErrorCode::kShapeMismatch,
                "compute_l1: tensor shapes differ");
  }
  if (target.data.size() != actual.data.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "compute_l1: tensor sizes differ");
  }
  if (target.data.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < target.data.size(); ++i) {
    sum += std::abs(static_cast<double>(target.data[i]) -
                    static_cast<double>(actual.data[i]));
  }
  return sum / static_cast<double>(target.data.size());
}

double measure_init(const core::WorkloadSpec& workload,
                    core::InferenceMode mode, backends::Backend& backend,
                    Clock& clock) {
  double start = clock.now_ms();
  auto session = backend.open_session(workload, mode);
  double init = session->init_ms();
  clock.advance_ms(init);
  return clock.now_ms() - start;
}

core::TestResult run_workload(const RunPlan& plan, backends::Backend& backend,
                              Clock& clock) {
  check_plan(plan);
  auto session = backend.open_session(plan.workload, plan.mode);
  double init_ms = session->init_ms();
  clock.advance_ms(init_ms);

  const double limit_ms = plan.workload.time_limit_s * 1000.0;
  const double start = clock.now_ms();
  std::vector<double> latencies;
  double l1_sum = 0.0;
  int l1_count = 0;
  while (clock.now_ms() - start < limit_ms) {
    backends::Inference inf;
    try {
      inf = session->infer();
    } catch (const Error& e) {
      // A finite trace ending early ends the measurement, not the test.
      if (e.code() == ErrorCode::kTraceExhausted && !latencies.empty()) break;
      throw;
    }
    clock.advance_ms(inf.latency_ms);
    latencies.push_back(inf.latency_ms);
    if (inf.output && inf.reference) {
      l1_sum += compute_l1(*inf.reference, *inf.output);
      ++l1_count;
    }
  }
  return finish_result(plan, std::move(latencies), init_ms, l1_sum, l1_count);
}

core::TestResult run_parallel(const RunPlan& plan, backends::Backend& backend,
                              Clock& clock) {
  check_plan(plan);
  if (plan.workload.parallel_instances != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "run_parallel requires parallel_instances == 2, got " +
                    std::to_string(plan.workload.parallel_instances));
  }
  if (backend.descriptor().max_concurrent_sessions < 2) {
    throw Error(ErrorCode::kUnsupportedMode,
                "backend " + backend.descriptor().name +
                    " does not support two concurrent sessions");
  }

  // Fail-fast: both sessions must open before anything is measured.
  std::unique_ptr<backends::Session> sessions[2];
  sessions[0] = backend.open_session(plan.workload, plan.mode);
  sessions[1] = backend.open_session(plan.workload, plan.mode);

  // Both models initialize concurrently; the suite resumes when the
  // slower one is ready.
  double init_ms =
      std::max(sessions[0]->init_ms(), sessions[1]->init_ms());
  clock.advance_ms(init_ms);

  const double limit_ms = plan.workload.time_limit_s * 1000.0;
  const double start = clock.now_ms();

  // Virtual-time schedule: each session has its own timeline; the next
  // event is always the session whose timeline is furthest behind.
  double timeline[2] = {start, start};
  bool done[2] = {false, false};
  std::vector<std::pair<double, double>> completions;  // (finish time, latency)
  while (!done[0] || !done[1]) {
    int s;
    if (done[0]) {
      s = 1;
    } else if (done[1]) {
      s = 0;
    } else {
      s = timeline[0] <= timeline[1] ? 0 : 1;
    }
    if (timeline[s] - start >= limit_ms) {
      done[s] = true;
      continue;
    }
    backends::Inference inf;
    try {
      inf = sessions[s]->infer();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kTraceExhausted && !completions.empty()) {
        done[s] = true;
        continue;
      }
      throw;
    }
    timeline[s] += inf.latency_ms;
    completions.emplace_back(timeline[s], inf.latency_ms);
  }
  clock.advance_ms(std::max(timeline[0], timeline[1]) - start);

  std::stable_sort(completions.begin(), completions.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<double> merged;
  merged.reserve(completions.size());
  for (const auto& [finish, latency] : completions) merged.push_back(latency);

  return finish_result(plan, std::move(merged), init_ms, 0.0, 0);
}

MemoryProbeOutcome memory_probe(const core::WorkloadSpec& workload,
                                core::InferenceMode mode,
                                backends::Backend& backend,
                                const MemoryLadder& ladder, Clock& clock) {
  auto violations = ladder.validate();
  if (!violations.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid memory ladder: " + violations.front());
  }
  auto session = backend.open_session(workload, mode);
  clock.advance_ms(session->init_ms());

  MemoryProbeOutcome outcome;
  bool first = true;
  for (int rung : ladder.resolutions_px) {
    try {
      backends::Inference inf = session->infer_at(rung);
      clock.advance_ms(inf.latency_ms);
      outcome.latencies_ms.push_back(inf.latency_ms);
      outcome.max_resolution_px = rung;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutOfMemory) throw;
      if (first) {
        outcome.first_rung_failure = true;
        outcome.max_resolution_px = 0;
      }
      break;
    }
    first = false;
  }
  return outcome;
}

}  // namespace nnbench::harness
