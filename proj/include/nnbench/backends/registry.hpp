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
#ifndef NNBENCH_BACKENDS_REGISTRY_HPP_
#define NNBENCH_BACKENDS_REGISTRY_HPP_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "nnbench/backends/backend.hpp"

namespace nnbench::backends {

// Name -> factory map. "synthetic" and "replay" are pre-registered;
// out-of-repo adapters add themselves here.
class BackendRegistry {
 public:
  using Factory =
      std::function<std::unique_ptr<Backend>(const nlohmann::json& config)>;

  static BackendRegistry& instance();

  void register_backend(const std::string& name, Factory factory);
  bool has(const std::string& name) const;
  std::vector<std::string> names() const;

  // Throws Error(kInvalidArgument) for unknown names.
  std::unique_ptr<Backend> create(const std::string& name,
                                  const nlohmann::json& config) const;

 private:
  BackendRegistry();
  std::map<std::string, Factory> factories_;
};

// Reads a backend config file ({"backend": "<name>", "<name>": {...}})
// and instantiates the named backend.
std::unique_ptr<Backend> create_from_config_file(const std::string& path);
std::unique_ptr<Backend> create_from_config(const nlohmann::json& config);

struct SyntheticConfig;
SyntheticConfig synthetic_config_from_json(const nlohmann::json& j);

}  // namespace nnbench::backends

#endif  // NNBENCH_BACKENDS_REGISTRY_HPP_
