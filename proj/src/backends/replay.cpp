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
#include "nnbench/backends/replay.hpp"

#include <fstream>
#include <sstream>

#include "nnbench/error.hpp"

namespace nnbench::backends {

namespace {

class ReplaySession : public Session {
 public:
  ReplaySession(LatencyTrace trace,
                std::unique_ptr<SessionCounter::Ticket> ticket)
      : trace_(std::move(trace)), ticket_(std::move(ticket)) {}

  double init_ms() const override { return trace_.init_ms; }

  Inference infer() override {
    if (next_ >= trace_.entries_ms.size()) {
      throw Error(ErrorCode::kTraceExhausted,
                  "replay trace exhausted after " + std::to_string(next_) +
                      " entries");
    }
    Inference inf;
    inf.latency_ms = trace_.entries_ms[next_++];
    return inf;
  }

  Inference infer_at(int /*resolution_px*/) override { return infer(); }

 private:
  LatencyTrace trace_;
  std::unique_ptr<SessionCounter::Ticket> ticket_;
  std::size_t next_ = 0;
};

}  // namespace

LatencyTrace parse_trace(const std::string& text) {
  LatencyTrace trace;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_init = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);
    if (line.rfind("init_ms=", 0) == 0) {
      trace.init_ms = std::stod(line.substr(8));
      saw_init = true;
      continue;
    }
    try {
      std::size_t consumed = 0;
      double value = std::stod(line, &consumed);
      if (consumed != line.size()) throw std::invalid_argument(line);
      if (value <= 0) {
        throw Error(ErrorCode::kParseError,
                    "trace line " + std::to_string(line_no) +
                        ": latency must be > 0");
      }
      trace.entries_ms.push_back(value);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::kParseError,
                  "trace line " + std::to_string(line_no) +
                      ": not a number: " + line);
    }
  }
  if (!saw_init) {
    throw Error(ErrorCode::kParseError, "trace file: missing init_ms= header");
  }
  return trace;
}

LatencyTrace load_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open trace file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_trace(buf.str());
}

ReplayBackend::ReplayBackend(ReplayConfig config)
    : config_(std::move(config)), counter_(config_.max_concurrent_sessions) {
  descriptor_.name = "replay";
  descriptor_.max_concurrent_sessions = config_.max_concurrent_sessions;
  fill_supported(&descriptor_, true);
  if (!config_.traces.empty()) {
    auto it = config_.traces.begin();
    descriptor_.declared_init_ms = it->second.init_ms;
  }
}

ReplayBackend::~ReplayBackend() = default;

std::unique_ptr<Session> ReplayBackend::open_session(
    const core::WorkloadSpec& workload, core::InferenceMode /*mode*/) {
  auto it = config_.traces.find(workload.id);
  if (it == config_.traces.end()) it = config_.traces.find("");
  if (it == config_.traces.end()) {
    throw Error(ErrorCode::kSessionOpenFailed,
                "replay backend: no trace for workload " + workload.id);
  }
  auto ticket = counter_.acquire();
  // An exhausted (empty) trace still opens; the first inference fails.
  return std::make_unique<ReplaySession>(it->second, std::move(ticket));
}

}  // namespace nnbench::backends
