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
#include <iostream>

#include "CLI11.hpp"
#include "nnbench/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"nnbench - inference benchmark harness and scoring engine"};
  app.require_subcommand(1);

  nnbench::cli::RunOptions run_opts;
  auto* run = app.add_subcommand("run", "run a benchmark suite");
  run->add_option("--suite", run_opts.suite_path, "suite config file");
  run->add_option("--backend", run_opts.backend_path, "backend config file");
  run->add_option("--score-config", run_opts.score_config_path,
                  "score config file");
  run->add_option("--out", run_opts.out_path, "output document path")
      ->required();
  run->add_flag("--sustained", run_opts.sustained,
                "request sustained performance mode");
  run->add_option("--memory-ladder", run_opts.memory_ladder,
                  "memory test resolutions (px)");

  nnbench::cli::ScoreOptions score_opts;
  auto* score = app.add_subcommand("score", "re-score a result document");
  score->add_option("document", score_opts.document_path, "result document")
      ->required();
  score->add_option("--score-config", score_opts.score_config_path,
                    "score config file");
  score->add_flag("--machine", score_opts.machine_output,
                  "emit the breakdown as JSON");

  nnbench::cli::RankOptions rank_opts;
  auto* rank = app.add_subcommand("rank", "rank a device latency table");
  rank->add_option("table", rank_opts.table_path, "latency table (csv/tsv)")
      ->required();
  rank->add_option("--policy", rank_opts.policy,
                   "baseline policy: top-record | per-test-best");
  rank->add_option("--format", rank_opts.format, "output: table | csv");
  rank->add_option("--min-overlap", rank_opts.min_overlap,
                   "minimum shared tests with the baseline");

  nnbench::cli::PlanOptions plan_opts;
  auto* plan = app.add_subcommand("plan", "partition an operator graph");
  plan->add_option("graph", plan_opts.graph_path, "graph file")->required();
  plan->add_option("--capability", plan_opts.capability_path,
                   "delegate capability file")
      ->required();
  plan->add_option("--overhead", plan_opts.crossing_overhead_ms,
                   "boundary crossing overhead (ms)");

  nnbench::cli::ExportOptions export_opts;
  auto* exp = app.add_subcommand("export", "render a result document");
  exp->add_option("document", export_opts.document_path, "result document")
      ->required();
  exp->add_option("--format", export_opts.format, "json | txt | csv");
  exp->add_option("--out", export_opts.out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (*run) return nnbench::cli::cmd_run(run_opts, std::cout, std::cerr);
  if (*score) return nnbench::cli::cmd_score(score_opts, std::cout, std::cerr);
  if (*rank) return nnbench::cli::cmd_rank(rank_opts, std::cout, std::cerr);
  if (*plan) return nnbench::cli::cmd_plan(plan_opts, std::cout, std::cerr);
  if (*exp) return nnbench::cli::cmd_export(export_opts, std::cout, std::cerr);
  return nnbench::cli::kExitFatal;
}
