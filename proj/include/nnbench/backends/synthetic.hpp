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
#ifndef NNBENCH_BACKENDS_SYNTHETIC_HPP_
#define NNBENCH_BACKENDS_SYNTHETIC_HPP_

#include <cstdint>
#include <memory>
#include <optional>

#include "nnbench/backends/backend.hpp"

namespace nnbench::backends {

// Deterministic stand-in for a real accelerator.
//
// Latency model:   latency_ms = c * (pixels * param_count)^gamma
// Footprint model: bytes(r)   = r^2 * 4 * bytes_per_element * overhead_factor
// Init model:      init_ms    = init_base_ms + init_per_mb_ms * model_size_mb
//
// Outputs are fixed-point mixes of (seed, workload, element index) mapped
// into [0,1]; epsilon adds uniform noise in [-epsilon, +epsilon]. INT8
// sessions quantize outputs to 256 levels; the unquantized, noise-free
// value is reported as the reference, so INT8 runs show a natural L1 gap.
struct SyntheticConfig {
  std::uint64_t seed = 1;
  double epsilon = 0.0;
  double latency_c = 0.002;
  double latency_gamma = 0.35;
  double init_base_ms = 50.0;
  double init_per_mb_ms = 5.0;
  double overhead_factor = 3.0;
  std::optional<std::int64_t> memory_budget_bytes;
  int max_concurrent_sessions = 4;
  // Output tensors are capped at this many elements; large image outputs
  // are represented by a deterministic subsample.
  int output_elements = 4096;
  bool fail_session_open = false;  // test hook
};

int bytes_per_element(core::Precision precision);

std::int64_t synthetic_footprint_bytes(int resolution_px,
                                       core::Precision precision,
                                       double overhead_factor);

double synthetic_latency_ms(const SyntheticConfig& config,
                            std::int64_t pixels, std::int64_t param_count);

double synthetic_init_ms(const SyntheticConfig& config, double model_size_mb);

class SyntheticBackend : public Backend {
 public:
  explicit SyntheticBackend(SyntheticConfig config);
  ~SyntheticBackend() override;

  const BackendDescriptor& descriptor() const override { return descriptor_; }

  std::unique_ptr<Session> open_session(const core::WorkloadSpec& workload,
                                        core::InferenceMode mode) override;

  const SyntheticConfig& config() const { return config_; }

 private:
  SyntheticConfig config_;
  BackendDescriptor descriptor_;
  SessionCounter counter_;
};

}  // namespace nnbench::backends

#endif  // NNBENCH_BACKENDS_SYNTHETIC_HPP_
