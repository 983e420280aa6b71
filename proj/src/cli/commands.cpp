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
#include "nnbench/cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "nnbench/analytics/analytics.hpp"
#include "nnbench/backends/registry.hpp"
#include "nnbench/backends/synthetic.hpp"
#include "nnbench/cli/result_document.hpp"
#include "nnbench/core/registry.hpp"
#include "nnbench/delegation/partition.hpp"
#include "nnbench/error.hpp"
#include "nnbench/harness/harness.hpp"
#include "nnbench/scoring/scoring.hpp"

namespace nnbench::cli {

namespace {

scoring::ScoreConfig load_score_config_or_default(const std::string& path) {
  if (path.empty()) return scoring::default_config();
  return scoring::load_config_file(path);
}

}  // namespace

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<core::WorkloadSpec> suite;
  std::unique_ptr<backends::Backend> backend;
  scoring::ScoreConfig score_config;
  try {
    suite = options.suite_path.empty()
                ? core::registry_default()
                : core::load_suite_file(options.suite_path);
    backend = options.backend_path.empty()
                  ? std::make_unique<backends::SyntheticBackend>(
                        backends::SyntheticConfig{})
                  : backends::create_from_config_file(options.backend_path);
    score_config = load_score_config_or_default(options.score_config_path);
    auto violations = score_config.validate();
    if (!violations.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "invalid score config: " + violations.front());
    }
  } catch (const Error& e) {
    err << "fatal: " << e.what() << "\n";
    return kExitFatal;
  }

  harness::MemoryLadder ladder = harness::MemoryLadder::default_ladder();
  if (!options.memory_ladder.empty()) {
    ladder.resolutions_px = options.memory_ladder;
    auto violations = ladder.validate();
    if (!violations.empty()) {
      err << "fatal: invalid memory ladder: " << violations.front() << "\n";
      return kExitFatal;
    }
  }

  ResultDocument doc;
  doc.generated_at = utc_timestamp_now();
  doc.suite_name = options.suite_path.empty() ? "default" : options.suite_path;
  doc.backend_name = backend->descriptor().name;
  doc.device_metadata["host"] = backend->descriptor().name;
  doc.score_config_fingerprint = scoring::config_fingerprint(score_config);

  harness::ManualClock clock;
  bool partial = false;
  for (const auto& workload : suite) {
    for (const auto& mode : workload.supported_modes) {
      ResultEntry entry;
      entry.workload_id = workload.id;
      entry.mode = mode;
      harness::RunPlan plan{workload, mode, doc.backend_name,
                            options.sustained, 0};
      try {
        if (workload.is_memory_test) {
          auto probe =
              harness::memory_probe(workload, mode, *backend, ladder, clock);
          core::TestResult r;
          r.workload_id = workload.id;
          r.mode = mode;
          r.sustained_mode = options.sustained;
          r.max_memory_resolution_px = probe.max_resolution_px;
          r.first_rung_failure = probe.first_rung_failure;
          r.latencies_ms = probe.latencies_ms;
          r.images_processed = static_cast<int>(probe.latencies_ms.size());
          if (!probe.latencies_ms.empty()) {
            auto [mean, std] =
                harness::aggregate_latencies(probe.latencies_ms);
            r.mean_ms = mean;
            r.std_ms = std;
          }
          entry.result = std::move(r);
        } else if (workload.parallel_instances == 2) {
          entry.result = harness::run_parallel(plan, *backend, clock);
        } else {
          entry.result = harness::run_workload(plan, *backend, clock);
        }
      } catch (const Error& e) {
        entry.error = e.what();
        partial = true;
      }
      doc.entries.push_back(std::move(entry));
    }
  }

  try {
    doc.score = scoring::final_score(doc.successful_results(), score_config);
  } catch (const Error& e) {
    doc.score_error = e.what();
  }

  try {
    write_document_file(doc, options.out_path);
  } catch (const Error& e) {
    err << "fatal: " << e.what() << "\n";
    return kExitFatal;
  }

  out << "ran " << doc.entries.size() << " tests on backend '"
      << doc.backend_name << "'";
  if (doc.score) {
    out << ", final score " << std::fixed << std::setprecision(1)
        << doc.score->final_score;
  }
  out << "\n";
  if (partial) out << "some tests errored; see " << options.out_path << "\n";
  return partial ? kExitPartial : kExitOk;
}

int cmd_score(const ScoreOptions& options, std::ostream& out,
              std::ostream& err) {
  ResultDocument doc;
  scoring::ScoreConfig config;
  try {
    doc = load_document_file(options.document_path);
    config = load_score_config_or_default(options.score_config_path);
    auto violations = config.validate();
    if (!violations.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "invalid score config: " + violations.front());
    }
  } catch (const Error& e) {
    err << "fatal: " << e.what() << "\n";
    return kExitFatal;
  }

  scoring::ScoreBreakdown breakdown;
  try {
    breakdown = scoring::final_score(doc.successful_results(), config);
  } catch (const Error& e) {
    err << "fatal: cannot score document: " << e.what() << "\n";
    return kExitFatal;
  }

  if (options.machine_output) {
    nlohmann::json j;
    j["per_test_scores"] = breakdown.per_test_scores;
    for (const auto& [c, s] : breakdown.category_scores) {
      j["category_scores"][scoring::to_string(c)] = s;
    }
    j["memory_multiplier"] = breakdown.memory_multiplier;
    j["final_score"] = breakdown.final_score;
    out << j.dump(2) << "\n";
  } else {
    out << "per-test scores:\n";
    for (const auto& [id, s] : breakdown.per_test_scores) {
      out << "  " << std::left << std::setw(56) << id << " " << std::fixed
          << std::setprecision(4) << s << "\n";
    }
    out << "category scores:\n";
    for (const auto& [c, s] : breakdown.category_scores) {
      out << "  " << std::left << std::setw(12) << scoring::to_string(c)
          << " " << std::fixed << std::setprecision(4) << s << "\n";
    }
    out << "memory multiplier: " << std::setprecision(2)
        << breakdown.memory_multiplier << "\n";
    out << "final score: " << std::setprecision(1) << breakdown.final_score
        << "\n";
  }

  // Integrity: the config that produced the document must reproduce the
  // embedded final score bit-for-bit.
  if (doc.score &&
      doc.score_config_fingerprint == scoring::config_fingerprint(config) &&
      breakdown.final_score != doc.score->final_score) {
    err << "integrity warning: recomputed final score "
        << breakdown.final_score << " differs from embedded "
        << doc.score->final_score << " under the fingerprinted config\n";
    return kExitPartial;
  }
  return kExitOk;
}

int cmd_rank(const RankOptions& options, std::ostream& out,
             std::ostream& err) {
  try {
    auto records = analytics::ingest_table_file(options.table_path);
    auto policy = analytics::policy_from_string(options.policy);
    auto percents =
        analytics::relative_performance(records, policy, options.min_overlap);
    auto ranking = analytics::rank(records, percents);
    if (options.format == "csv") {
      out << "rank,soc_name,accelerator,relative_perf_percent\n";
      for (const auto& e : ranking) {
        out << e.rank << "," << e.record.soc_name << ",\""
            << e.record.accelerator << "\","
            << analytics::round_percent(e.relative_perf_percent) << "\n";
      }
    } else {
      out << std::left << std::setw(5) << "rank" << std::setw(28) << "SoC"
          << std::setw(40) << "accelerator" << "relative perf\n";
      for (const auto& e : ranking) {
        out << std::left << std::setw(5) << e.rank << std::setw(28)
            << e.record.soc_name << std::setw(40) << e.record.accelerator
            << analytics::round_percent(e.relative_perf_percent) << "%\n";
      }
    }
  } catch (const Error& e) {
    err << "fatal: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitOk;
}

namespace {

delegation::SupportPredicate parse_capability_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open capability file: " + path);
  }
  auto supported = std::make_shared<
      std::set<std::pair<delegation::OpKind, core::Precision>>>();
  std::string line;
  int line_no = 0;
  bool all = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag != "support") {
      throw Error(ErrorCode::kParseError,
                  "capability line " + std::to_string(line_no) +
                      ": expected 'support ...'");
    }
    std::string kind, precision;
    ls >> kind >> precision;
    if (kind == "all") {
      all = true;
      continue;
    }
    delegation::OpKind k = delegation::op_kind_from_string(kind);
    if (precision.empty()) {
      for (core::Precision p : {core::Precision::kInt8, core::Precision::kFp16,
                                core::Precision::kFp32}) {
        supported->insert({k, p});
      }
    } else {
      supported->insert({k, core::precision_from_string(precision)});
    }
  }
  if (all) {
    return [](delegation::OpKind, core::Precision) { return true; };
  }
  return [supported](delegation::OpKind k, core::Precision p) {
    return supported->count({k, p}) > 0;
  };
}

}  // namespace

int cmd_plan(const PlanOptions& options, std::ostream& out,
             std::ostream& err) {
  try {
    auto doc = delegation::load_graph_file(options.graph_path);
    auto supported = parse_capability_file(options.capability_path);
    auto plan = delegation::partition(doc.graph, supported);

    out << "subgraphs: " << plan.subgraphs.size() << "\n";
    for (std::size_t k = 0; k < plan.subgraphs.size(); ++k) {
      out << "  delegate[" << k << "]:";
      for (const auto& id : plan.subgraphs[k]) out << " " << id;
      out << "\n";
    }
    out << "  cpu:";
    for (const auto& [id, group] : plan.assignment) {
      if (group == delegation::kCpuAssignment) out << " " << id;
    }
    out << "\n";
    out << "boundary crossings: " << plan.boundary_crossings << "\n";

    if (!doc.costs.empty()) {
      std::map<std::string, delegation::NodeCost> costs;
      for (const auto& [id, cost] : doc.costs) {
        costs[id] = delegation::NodeCost{cost.first, cost.second};
      }
      double total = delegation::estimate_latency(plan, costs,
                                                  options.crossing_overhead_ms);
      out << "estimated latency: " << std::fixed << std::setprecision(3)
          << total << " ms (crossing overhead "
          << options.crossing_overhead_ms << " ms)\n";
    } else {
      out << "estimated latency: n/a (no cost entries in graph file)\n";
    }
  } catch (const Error& e) {
    err << "fatal: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitOk;
}

int cmd_export(const ExportOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    ResultDocument doc = load_document_file(options.document_path);
    std::string rendered;
    if (options.format == "txt") {
      rendered = render_document_text(doc);
    } else if (options.format == "csv") {
      rendered = render_document_csv(doc);
    } else if (options.format == "json") {
      rendered = document_to_json(doc).dump(2) + "\n";
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown export format: " + options.format);
    }
    if (options.out_path.empty()) {
      out << rendered;
    } else {
      std::ofstream file(options.out_path);
      if (!file) {
        throw Error(ErrorCode::kIoError,
                    "cannot write export: " + options.out_path);
      }
      file << rendered;
    }
  } catch (const Error& e) {
    err << "fatal: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitOk;
}

}  // namespace nnbench::cli
