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
#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "nnbench/backends/registry.hpp"
#include "nnbench/backends/replay.hpp"
#include "nnbench/backends/synthetic.hpp"
#include "nnbench/core/registry.hpp"
#include "nnbench/error.hpp"
#include "nnbench/harness/harness.hpp"

using namespace nnbench;
using namespace nnbench::backends;
using nnbench::core::InferenceMode;
using nnbench::core::Precision;
using nnbench::core::Target;

namespace {

const core::WorkloadSpec& mobilenet() {
  static auto suite = core::registry_default();
  return *core::find_workload(suite, "section01_mobilenet_v2_nnapi_fp16");
}

constexpr InferenceMode kAccFp16{Target::kAccelerator, Precision::kFp16};
constexpr InferenceMode kAccInt8{Target::kAccelerator, Precision::kInt8};

}  // namespace

TEST_CASE("footprint model follows the documented formula") {
  CHECK(bytes_per_element(Precision::kInt8) == 1);
  CHECK(bytes_per_element(Precision::kFp16) == 2);
  CHECK(bytes_per_element(Precision::kFp32) == 4);

  // bytes(r) = r^2 * 4 channels * bytes_per_element * overhead
  CHECK(synthetic_footprint_bytes(1000, Precision::kFp16, 3.0) ==
        std::int64_t{1000} * 1000 * 4 * 2 * 3);
  CHECK(synthetic_footprint_bytes(200, Precision::kFp32, 1.0) ==
        std::int64_t{200} * 200 * 4 * 4);
}

TEST_CASE("latency and init cost models are deterministic formulas") {
  SyntheticConfig config;
  double work = 224.0 * 224 * 3'500'000;
  CHECK(synthetic_latency_ms(config, 224 * 224, 3'500'000) ==
        doctest::Approx(0.002 * std::pow(work, 0.35)).epsilon(1e-12));
  CHECK(synthetic_init_ms(config, 14.0) == 50.0 + 5.0 * 14.0);
}

TEST_CASE("synthetic outputs are bitwise deterministic") {
  SyntheticConfig config;
  config.seed = 7;
  SyntheticBackend a(config);
  SyntheticBackend b(config);
  auto sa = a.open_session(mobilenet(), kAccFp16);
  auto sb = b.open_session(mobilenet(), kAccFp16);
  for (int i = 0; i < 3; ++i) {
    Inference ia = sa->infer();
    Inference ib = sb->infer();
    REQUIRE(ia.output);
    REQUIRE(ib.output);
    CHECK(ia.latency_ms == ib.latency_ms);
    CHECK(ia.output->data == ib.output->data);
    CHECK(ia.reference->data == ib.reference->data);
  }
}

TEST_CASE("epsilon 0 means the output equals its reference") {
  SyntheticBackend backend(SyntheticConfig{});
  auto session = backend.open_session(mobilenet(), kAccFp16);
  Inference inf = session->infer();
  CHECK(harness::compute_l1(*inf.reference, *inf.output) == 0.0);
}

TEST_CASE("epsilon noise has the analytic mean absolute error") {
  // |U(-eps, eps)| has expectation eps/2; at eps = 0.5 the L1 against the
  // noise-free reference is 0.25, checked against a sampling oracle.
  SyntheticConfig config;
  config.epsilon = 0.5;
  config.output_elements = 200000;
  SyntheticBackend backend(config);
  auto session = backend.open_session(mobilenet(), kAccFp16);
  Inference inf = session->infer();
  double l1 = harness::compute_l1(*inf.reference, *inf.output);
  CHECK(l1 == doctest::Approx(0.25).epsilon(0.04));  // +-0.01 absolute
  CHECK(std::abs(l1 - 0.25) < 0.01);

  // Brute-force sampling oracle over the same elements.
  double sum = 0.0;
  for (std::size_t i = 0; i < inf.output->data.size(); ++i) {
    sum += std::abs(static_cast<double>(inf.output->data[i]) -
                    static_cast<double>(inf.reference->data[i]));
  }
  CHECK(l1 == doctest::Approx(sum / inf.output->data.size()).epsilon(1e-12));
}

TEST_CASE("int8 sessions quantize to 256 levels") {
  SyntheticBackend backend(SyntheticConfig{});
  auto session = backend.open_session(mobilenet(), kAccInt8);
  Inference inf = session->infer();
  for (float v : inf.output->data) {
    double q = static_cast<double>(v) * 255.0;
    CHECK(std::abs(q - std::round(q)) < 1e-4);
  }
  double l1 = harness::compute_l1(*inf.reference, *inf.output);
  CHECK(l1 > 0.0);
  CHECK(l1 < 0.01);  // quantization alone stays below the default e_ref
}

TEST_CASE("budget overruns raise out-of-memory") {
  SyntheticConfig config;
  config.memory_budget_bytes =
      synthetic_footprint_bytes(1000, Precision::kFp16, 3.0);
  SyntheticBackend backend(config);
  auto session = backend.open_session(mobilenet(), kAccFp16);
  CHECK_NOTHROW(session->infer_at(1000));
  try {
    session->infer_at(2000);
    FAIL("expected out-of-memory");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOutOfMemory);
  }
}

TEST_CASE("session accounting enforces the concurrency limit") {
  SyntheticConfig config;
  config.max_concurrent_sessions = 2;
  SyntheticBackend backend(config);
  auto s1 = backend.open_session(mobilenet(), kAccFp16);
  auto s2 = backend.open_session(mobilenet(), kAccFp16);
  try {
    auto s3 = backend.open_session(mobilenet(), kAccFp16);
    FAIL("expected session limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSessionLimit);
  }
  s1.reset();  // releasing a slot makes room again
  CHECK_NOTHROW(backend.open_session(mobilenet(), kAccFp16));
}

TEST_CASE("injected open failure is a distinct error") {
  SyntheticConfig config;
  config.fail_session_open = true;
  SyntheticBackend backend(config);
  try {
    backend.open_session(mobilenet(), kAccFp16);
    FAIL("expected open failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSessionOpenFailed);
  }
}

TEST_CASE("trace files parse with header, comments and blank lines") {
  LatencyTrace trace = parse_trace("# comment\ninit_ms=500\n\n10\n20 # tail\n");
  CHECK(trace.init_ms == 500.0);
  CHECK(trace.entries_ms == std::vector<double>{10.0, 20.0});

  CHECK_THROWS_AS(parse_trace("10\n20\n"), Error);  // missing init header
  try {
    parse_trace("init_ms=1\nabc\n");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_trace("init_ms=1\n-5\n"), Error);
}

TEST_CASE("replay sessions consume each entry exactly once") {
  ReplayConfig config;
  config.traces[""] = LatencyTrace{{10.0, 20.0}, 500.0};
  ReplayBackend backend(config);
  auto session = backend.open_session(mobilenet(), kAccFp16);
  CHECK(session->init_ms() == 500.0);
  CHECK(session->infer().latency_ms == 10.0);
  CHECK(session->infer().latency_ms == 20.0);
  try {
    session->infer();
    FAIL("expected exhaustion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTraceExhausted);
  }
  // A second session starts from its own copy of the trace.
  auto fresh = backend.open_session(mobilenet(), kAccFp16);
  CHECK(fresh->infer().latency_ms == 10.0);
}

TEST_CASE("an empty trace opens but fails on first inference") {
  ReplayConfig config;
  config.traces[""] = LatencyTrace{{}, 100.0};
  ReplayBackend backend(config);
  auto session = backend.open_session(mobilenet(), kAccFp16);
  try {
    session->infer();
    FAIL("expected exhaustion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTraceExhausted);
  }
}

TEST_CASE("replay per-workload traces override the fallback") {
  ReplayConfig config;
  config.traces[""] = LatencyTrace{{1.0}, 10.0};
  config.traces[mobilenet().id] = LatencyTrace{{42.0}, 20.0};
  ReplayBackend backend(config);
  auto session = backend.open_session(mobilenet(), kAccFp16);
  CHECK(session->infer().latency_ms == 42.0);

  ReplayConfig no_fallback;
  no_fallback.traces["other_workload"] = LatencyTrace{{1.0}, 10.0};
  ReplayBackend strict(no_fallback);
  try {
    strict.open_session(mobilenet(), kAccFp16);
    FAIL("expected open failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSessionOpenFailed);
  }
}

TEST_CASE("backend registry instantiates from a config document") {
  auto& registry = BackendRegistry::instance();
  CHECK(registry.has("synthetic"));
  CHECK(registry.has("replay"));
  CHECK_THROWS_AS(registry.create("no_such_backend", {}), Error);

  nlohmann::json config = {
      {"backend", "synthetic"},
      {"synthetic", {{"seed", 3}, {"epsilon", 0.25}, {"output_elements", 64}}},
  };
  auto backend = create_from_config(config);
  CHECK(backend->descriptor().name == "synthetic");
  auto session = backend->open_session(mobilenet(), kAccFp16);
  CHECK(session->infer().output->data.size() == 64);
}
