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
#ifndef NNBENCH_CLI_COMMANDS_HPP_
#define NNBENCH_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nnbench::cli {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitPartial = 2;

struct RunOptions {
  std::string suite_path;         // empty: built-in default suite
  std::string backend_path;       // empty: synthetic backend defaults
  std::string score_config_path;  // empty: shipped default config
  std::string out_path;
  bool sustained = false;
  std::vector<int> memory_ladder;  // empty: default ladder
};

// Runs every (workload, mode) pair of the suite on the configured
// backend and writes a ResultDocument. 0 = all tests ran, 2 = some tests
// errored (recorded per-test), 1 = fatal configuration error.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

struct ScoreOptions {
  std::string document_path;
  std::string score_config_path;  // empty: shipped default config
  bool machine_output = false;    // emit the breakdown as JSON
};

// Re-scores the embedded results and prints the breakdown. Exit 2 with an
// integrity warning when the fingerprinted config no longer reproduces
// the embedded final score.
int cmd_score(const ScoreOptions& options, std::ostream& out,
              std::ostream& err);

struct RankOptions {
  std::string table_path;
  std::string policy = "top-record";  // or "per-test-best"
  std::string format = "table";       // or "csv"
  int min_overlap = 4;
};

int cmd_rank(const RankOptions& options, std::ostream& out, std::ostream& err);

struct PlanOptions {
  std::string graph_path;
  std::string capability_path;
  double crossing_overhead_ms = 0.0;
};

int cmd_plan(const PlanOptions& options, std::ostream& out, std::ostream& err);

struct ExportOptions {
  std::string document_path;
  std::string format = "txt";  // txt | csv | json
  std::string out_path;        // empty: stdout
};

int cmd_export(const ExportOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace nnbench::cli

#endif  // NNBENCH_CLI_COMMANDS_HPP_
