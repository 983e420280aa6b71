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

// Regenerates the shipped default suite and score config data files.
// Usage: gen_defaults <data-dir>

#include <fstream>
#include <iostream>

#include "nnbench/core/registry.hpp"
#include "nnbench/scoring/scoring.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_defaults <data-dir>\n";
    return 1;
  }
  std::string dir = argv[1];
  {
    std::ofstream out(dir + "/suites/default_suite.json");
    out << nnbench::core::serialize_suite(nnbench::core::registry_default());
  }
  {
    std::ofstream out(dir + "/score/default_score_config.json");
    out << nnbench::scoring::serialize_config(nnbench::scoring::default_config());
  }
  std::cout << "wrote defaults under " << dir << "\n";
  return 0;
}
