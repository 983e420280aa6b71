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
#ifndef NNBENCH_BACKENDS_BACKEND_HPP_
#define NNBENCH_BACKENDS_BACKEND_HPP_

#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "nnbench/core/types.hpp"
#include "nnbench/delegation/graph.hpp"

namespace nnbench::backends {

// Static capabilities of a backend. The supported map is total over the
// delegation op-kind vocabulary.
struct BackendDescriptor {
  std::string name;
  std::map<std::pair<delegation::OpKind, core::Precision>, bool> supported;
  int max_concurrent_sessions = 1;
  std::optional<std::int64_t> memory_budget_bytes;
  std::optional<double> declared_init_ms;

  bool supports_op(delegation::OpKind kind, core::Precision precision) const;
};

// Fills `supported` with every (kind, precision) pair set to `value`.
void fill_supported(BackendDescriptor* descriptor, bool value);

// One inference performed by a session. `output` / `reference` are absent
// for backends that only replay latencies.
struct Inference {
  double latency_ms = 0.0;
  std::optional<core::Tensor> output;
  std::optional<core::Tensor> reference;
};

// A single-owner inference session. Latencies are returned by the session
// (simulated backends compute them; a real adapter would measure them);
// the harness advances its clock by the returned value.
class Session {
 public:
  virtual ~Session() = default;

  // Model preparation cost, charged once at open.
  virtual double init_ms() const = 0;

  // One inference at the workload's native resolution.
  virtual Inference infer() = 0;

  // One inference at a square input of the given side length. Throws
  // Error(kOutOfMemory) when the footprint exceeds the backend budget.
  virtual Inference infer_at(int resolution_px) = 0;
};

class Backend {
 public:
  virtual ~Backend() = default;

  virtual const BackendDescriptor& descriptor() const = 0;

  // Throws kUnsupportedMode, kSessionLimit or kSessionOpenFailed.
  virtual std::unique_ptr<Session> open_session(
      const core::WorkloadSpec& workload, core::InferenceMode mode) = 0;
};

// Shared open/close accounting used by the built-in backends. Sessions
// hold a Ticket; its destruction releases the slot.
class SessionCounter {
 public:
  explicit SessionCounter(int limit) : limit_(limit) {}

  class Ticket {
   public:
    explicit Ticket(SessionCounter* counter) : counter_(counter) {}
    ~Ticket() {
      if (counter_) counter_->release();
    }
    Ticket(const Ticket&) = delete;
    Ticket& operator=(const Ticket&) = delete;

   private:
    SessionCounter* counter_;
  };

  // Throws Error(kSessionLimit) when the limit is reached.
  std::unique_ptr<Ticket> acquire();

 private:
  friend class Ticket;
  void release() { active_.fetch_sub(1); }

  int limit_;
  std::atomic<int> active_{0};
};

}  // namespace nnbench::backends

#endif  // NNBENCH_BACKENDS_BACKEND_HPP_
