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
#include "nnbench/backends/synthetic.hpp"

#include <cmath>

#include "nnbench/error.hpp"

namespace nnbench::backends {

namespace {

// splitmix64: the only mixing primitive; integer-only, so outputs are
// bitwise identical on any platform.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Top 53 bits as a double in [0, 1). Exact in IEEE double.
double unit_double(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

class SyntheticSession : public Session {
 public:
  SyntheticSession(const SyntheticConfig& config,
                   const core::WorkloadSpec& workload,
                   core::InferenceMode mode,
                   std::unique_ptr<SessionCounter::Ticket> ticket)
      : config_(config),
        workload_(workload),
        mode_(mode),
        ticket_(std::move(ticket)),
        stream_base_(mix64(config.seed ^ fnv1a64(workload.id))) {}

  double init_ms() const override {
    return synthetic_init_ms(config_, workload_.model_size_mb);
  }

  Inference infer() override {
    return run(workload_.pixel_count());
  }

  Inference infer_at(int resolution_px) override {
    return run(static_cast<std::int64_t>(resolution_px) * resolution_px);
  }

 private:
  Inference run(std::int64_t pixels) {
    if (config_.memory_budget_bytes) {
      std::int64_t bytes = pixels * 4 * bytes_per_element(mode_.precision);
      bytes = static_cast<std::int64_t>(
          static_cast<double>(bytes) * config_.overhead_factor);
      if (bytes > *config_.memory_budget_bytes) {
        throw Error(ErrorCode::kOutOfMemory,
                    "synthetic allocation of " + std::to_string(bytes) +
                        " bytes exceeds budget");
      }
    }
    Inference inf;
    inf.latency_ms =
        synthetic_latency_ms(config_, pixels, workload_.param_count);

    const int n = config_.output_elements;
    core::Tensor out;
    core::Tensor ref;
    out.shape = {n};
    ref.shape = {n};
    out.data.resize(n);
    ref.data.resize(n);
    std::uint64_t image_base = mix64(stream_base_ ^ inference_index_);
    for (int i = 0; i < n; ++i) {
      std::uint64_t h = mix64(image_base ^ static_cast<std::uint64_t>(i));
      double value = unit_double(h);
      ref.data[i] = static_cast<float>(value);
      if (config_.epsilon > 0.0) {
        std::uint64_t hn = mix64(h ^ 0xA5A5A5A5A5A5A5A5ULL);
        double noise = (2.0 * unit_double(hn) - 1.0) * config_.epsilon;
        value += noise;
      }
      if (mode_.precision == core::Precision::kInt8) {
        // 256-level quantization on [0,1].
        double q = value * 255.0;
        if (q < 0.0) q = 0.0;
        if (q > 255.0) q = 255.0;
        value = std::floor(q + 0.5) / 255.0;
      }
      out.data[i] = static_cast<float>(value);
    }
    inf.output = std::move(out);
    inf.reference = std::move(ref);
    ++inference_index_;
    return inf;
  }

  SyntheticConfig config_;
  core::WorkloadSpec workload_;
  core::InferenceMode mode_;
  std::unique_ptr<SessionCounter::Ticket> ticket_;
  std::uint64_t stream_base_;
  std::uint64_t inference_index_ = 0;
};

}  // namespace

int bytes_per_element(core::Precision precision) {
  switch (precision) {
    case core::Precision::kInt8:
      return 1;
    case core::Precision::kFp16:
      return 2;
    case core::Precision::kFp32:
      return 4;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown precision");
}

std::int64_t synthetic_footprint_bytes(int resolution_px,
                                       core::Precision precision,
                                       double overhead_factor) {
  std::int64_t pixels =
      static_cast<std::int64_t>(resolution_px) * resolution_px;
  std::int64_t raw = pixels * 4 * bytes_per_element(precision);
  return static_cast<std::int64_t>(static_cast<double>(raw) * overhead_factor);
}

double synthetic_latency_ms(const SyntheticConfig& config, std::int64_t pixels,
                            std::int64_t param_count) {
  double work = static_cast<double>(pixels) * static_cast<double>(param_count);
  return config.latency_c * std::pow(work, config.latency_gamma);
}

double synthetic_init_ms(const SyntheticConfig& config, double model_size_mb) {
  return config.init_base_ms + config.init_per_mb_ms * model_size_mb;
}

SyntheticBackend::SyntheticBackend(SyntheticConfig config)
    : config_(config), counter_(config.max_concurrent_sessions) {
  descriptor_.name = "synthetic";
  descriptor_.max_concurrent_sessions = config_.max_concurrent_sessions;
  descriptor_.memory_budget_bytes = config_.memory_budget_bytes;
  fill_supported(&descriptor_, true);
}

SyntheticBackend::~SyntheticBackend() = default;

std::unique_ptr<Session> SyntheticBackend::open_session(
    const core::WorkloadSpec& workload, core::InferenceMode mode) {
  if (config_.fail_session_open) {
    throw Error(ErrorCode::kSessionOpenFailed,
                "synthetic backend: injected open failure");
  }
  auto ticket = counter_.acquire();
  return std::make_unique<SyntheticSession>(config_, workload, mode,
                                            std::move(ticket));
}

}  // namespace nnbench::backends
