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
#include "nnbench/backends/registry.hpp"

#include <fstream>

#include "nnbench/backends/replay.hpp"
#include "nnbench/backends/synthetic.hpp"
#include "nnbench/error.hpp"

namespace nnbench::backends {

SyntheticConfig synthetic_config_from_json(const nlohmann::json& j) {
  SyntheticConfig c;
  c.seed = j.value("seed", c.seed);
  c.epsilon = j.value("epsilon", c.epsilon);
  c.latency_c = j.value("latency_c", c.latency_c);
  c.latency_gamma = j.value("latency_gamma", c.latency_gamma);
  c.init_base_ms = j.value("init_base_ms", c.init_base_ms);
  c.init_per_mb_ms = j.value("init_per_mb_ms", c.init_per_mb_ms);
  c.overhead_factor = j.value("overhead_factor", c.overhead_factor);
  if (j.contains("memory_budget_bytes") && !j["memory_budget_bytes"].is_null()) {
    c.memory_budget_bytes = j["memory_budget_bytes"].get<std::int64_t>();
  }
  c.max_concurrent_sessions =
      j.value("max_concurrent_sessions", c.max_concurrent_sessions);
  c.output_elements = j.value("output_elements", c.output_elements);
  return c;
}

namespace {

ReplayConfig replay_config_from_json(const nlohmann::json& j) {
  ReplayConfig c;
  c.max_concurrent_sessions =
      j.value("max_concurrent_sessions", c.max_concurrent_sessions);
  if (j.contains("traces")) {
    for (const auto& [workload_id, path] : j["traces"].items()) {
      c.traces[workload_id] = load_trace_file(path.get<std::string>());
    }
  }
  if (j.contains("default_trace")) {
    c.traces[""] = load_trace_file(j["default_trace"].get<std::string>());
  }
  return c;
}

}  // namespace

BackendRegistry::BackendRegistry() {
  factories_["synthetic"] = [](const nlohmann::json& config) {
    return std::make_unique<SyntheticBackend>(
        synthetic_config_from_json(config));
  };
  factories_["replay"] = [](const nlohmann::json& config) {
    return std::make_unique<ReplayBackend>(replay_config_from_json(config));
  };
}

BackendRegistry& BackendRegistry::instance() {
  static BackendRegistry registry;
  return registry;
}

void BackendRegistry::register_backend(const std::string& name,
                                       Factory factory) {
  factories_[name] = std::move(factory);
}

bool BackendRegistry::has(const std::string& name) const {
  return factories_.count(name) > 0;
}

std::vector<std::string> BackendRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : factories_) out.push_back(name);
  return out;
}

std::unique_ptr<Backend> BackendRegistry::create(
    const std::string& name, const nlohmann::json& config) const {
  auto it = factories_.find(name);
  if (it == factories_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown backend: " + name);
  }
  return it->second(config);
}

std::unique_ptr<Backend> create_from_config(const nlohmann::json& config) {
  if (!config.contains("backend")) {
    throw Error(ErrorCode::kParseError,
                "backend config: missing 'backend' field");
  }
  std::string name = config["backend"].get<std::string>();
  nlohmann::json params = config.value(name, nlohmann::json::object());
  return BackendRegistry::instance().create(name, params);
}

std::unique_ptr<Backend> create_from_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open backend config: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("backend config does not parse: ") + e.what());
  }
  return create_from_config(j);
}

}  // namespace nnbench::backends
