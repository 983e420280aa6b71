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
#ifndef NNBENCH_ANALYTICS_ANALYTICS_HPP_
#define NNBENCH_ANALYTICS_ANALYTICS_HPP_

#include <map>
#include <string>
#include <vector>

namespace nnbench::analytics {

// One device/SoC row of a latency table.
struct DeviceRecord {
  std::string device_name;
  std::string soc_name;
  std::string accelerator;
  std::map<std::string, double> per_test_latency_ms;
  std::map<std::string, std::string> metadata;
};

struct RankingEntry {
  DeviceRecord record;
  double relative_perf_percent = 0.0;
  int rank = 0;
};

// Delimited text (comma or tab, auto-detected from the header row).
// Required columns: device_name, soc_name. Optional: accelerator.
// Columns prefixed "meta:" land in metadata; every other column is a
// test id whose cells are decimal latencies (blank = absent).
std::vector<DeviceRecord> ingest_table(const std::string& document);
std::vector<DeviceRecord> ingest_table_file(const std::string& path);

enum class BaselinePolicy { kTopRecord, kPerTestBest };

BaselinePolicy policy_from_string(const std::string& s);

// percent = 100 * geomean over shared test ids of (t_baseline / t_record).
// TOP_RECORD: the full-coverage record with the lowest geomean latency is
// the baseline (its own value is 100). PER_TEST_BEST: the per-column
// minima form a virtual baseline, rescaled so the best record is 100.
// Records sharing fewer than min_overlap test ids with the baseline are
// rejected with an error naming the record.
std::vector<double> relative_performance(
    const std::vector<DeviceRecord>& records, BaselinePolicy policy,
    int min_overlap = 4);

// Descending by percent; ties by soc_name then device_name ascending.
std::vector<RankingEntry> rank(const std::vector<DeviceRecord>& records,
                               const std::vector<double>& percents);

// Display rounding: half away from zero to integer.
int round_percent(double percent);

}  // namespace nnbench::analytics

#endif  // NNBENCH_ANALYTICS_ANALYTICS_HPP_
