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
#include "nnbench/analytics/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "nnbench/error.hpp"

namespace nnbench::analytics {

namespace {

// Minimal delimited-text splitter with double-quote support, so cells may
// contain the delimiter (accelerator names do).
std::vector<std::string> split_row(const std::string& line, char delim) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
    } else if (c == '"' && cell.empty()) {
      quoted = true;
    } else if (c == delim) {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double geomean_ratio(const DeviceRecord& record,
                     const std::map<std::string, double>& baseline,
                     int min_overlap) {
  double log_sum = 0.0;
  int overlap = 0;
  for (const auto& [test_id, t_record] : record.per_test_latency_ms) {
    auto it = baseline.find(test_id);
    if (it == baseline.end()) continue;
    log_sum += std::log(it->second / t_record);
    ++overlap;
  }
  if (overlap < min_overlap) {
    throw Error(ErrorCode::kInvalidArgument,
                "record '" + record.device_name + "' shares only " +
                    std::to_string(overlap) +
                    " test ids with the baseline (minimum " +
                    std::to_string(min_overlap) + ")");
  }
  return std::exp(log_sum / overlap);
}

}  // namespace

std::vector<DeviceRecord> ingest_table(const std::string& document) {
  std::istringstream in(document);
  std::string header;
  if (!std::getline(in, header) || trim(header).empty()) {
    throw Error(ErrorCode::kParseError, "table document is empty");
  }
  char delim = header.find('\t') != std::string::npos ? '\t' : ',';
  std::vector<std::string> columns = split_row(header, delim);
  for (auto& c : columns) c = trim(c);

  int device_col = -1;
  int soc_col = -1;
  int accel_col = -1;
  for (int i = 0; i < static_cast<int>(columns.size()); ++i) {
    if (columns[i] == "device_name") device_col = i;
    if (columns[i] == "soc_name") soc_col = i;
    if (columns[i] == "accelerator") accel_col = i;
  }
  if (device_col < 0 || soc_col < 0) {
    throw Error(ErrorCode::kParseError,
                "header must contain device_name and soc_name columns");
  }

  std::vector<DeviceRecord> records;
  std::set<std::pair<std::string, std::string>> keys;
  std::string line;
  int row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_row(line, delim);
    if (cells.size() != columns.size()) {
      throw Error(ErrorCode::kParseError,
                  "row " + std::to_string(row_no) + ": expected " +
                      std::to_string(columns.size()) + " cells, got " +
                      std::to_string(cells.size()));
    }
    DeviceRecord record;
    for (int i = 0; i < static_cast<int>(columns.size()); ++i) {
      std::string cell = trim(cells[i]);
      if (i == device_col) {
        record.device_name = cell;
      } else if (i == soc_col) {
        record.soc_name = cell;
      } else if (i == accel_col) {
        record.accelerator = cell;
      } else if (columns[i].rfind("meta:", 0) == 0) {
        if (!cell.empty()) record.metadata[columns[i].substr(5)] = cell;
      } else {
        if (cell.empty()) continue;
        try {
          std::size_t consumed = 0;
          double value = std::stod(cell, &consumed);
          if (consumed != cell.size()) throw std::invalid_argument(cell);
          if (!(value > 0)) {
            throw Error(ErrorCode::kParseError,
                        "row " + std::to_string(row_no) + ": latency in '" +
                            columns[i] + "' must be > 0");
          }
          record.per_test_latency_ms[columns[i]] = value;
        } catch (const std::invalid_argument&) {
          throw Error(ErrorCode::kParseError,
                      "row " + std::to_string(row_no) +
                          ": non-numeric latency cell '" + cell + "' in '" +
                          columns[i] + "'");
        }
      }
    }
    if (!keys.insert({record.device_name, record.soc_name}).second) {
      throw Error(ErrorCode::kParseError,
                  "row " + std::to_string(row_no) + ": duplicate (device, soc) key (" +
                      record.device_name + ", " + record.soc_name + ")");
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<DeviceRecord> ingest_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open table: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ingest_table(buf.str());
}

BaselinePolicy policy_from_string(const std::string& s) {
  if (s == "top-record") return BaselinePolicy::kTopRecord;
  if (s == "per-test-best") return BaselinePolicy::kPerTestBest;
  throw Error(ErrorCode::kParseError, "unknown baseline policy: " + s);
}

std::vector<double> relative_performance(
    const std::vector<DeviceRecord>& records, BaselinePolicy policy,
    int min_overlap) {
  if (records.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no records to analyze");
  }

  std::set<std::string> all_test_ids;
  for (const auto& r : records) {
    for (const auto& [id, _] : r.per_test_latency_ms) all_test_ids.insert(id);
  }

  if (policy == BaselinePolicy::kTopRecord) {
    // Candidate baselines must cover every test id; among them the one
    // with the lowest geomean latency wins.
    int baseline = -1;
    double best_gm = 0.0;
    for (int i = 0; i < static_cast<int>(records.size()); ++i) {
      if (records[i].per_test_latency_ms.size() != all_test_ids.size()) {
        continue;
      }
      double log_sum = 0.0;
      for (const auto& [_, t] : records[i].per_test_latency_ms) {
        log_sum += std::log(t);
      }
      double gm = std::exp(log_sum / records[i].per_test_latency_ms.size());
      if (baseline < 0 || gm < best_gm ||
          (gm == best_gm &&
           records[i].soc_name < records[baseline].soc_name)) {
        baseline = i;
        best_gm = gm;
      }
    }
    if (baseline < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no record covers all test ids; TOP_RECORD needs a "
                  "full-coverage baseline");
    }
    std::vector<double> percents;
    percents.reserve(records.size());
    for (const auto& r : records) {
      percents.push_back(
          100.0 *
          geomean_ratio(r, records[baseline].per_test_latency_ms, min_overlap));
    }
    return percents;
  }

  // PER_TEST_BEST: per-column minima, then rescale so the best record
  // sits at 100.
  std::map<std::string, double> best;
  for (const auto& r : records) {
    for (const auto& [id, t] : r.per_test_latency_ms) {
      auto it = best.find(id);
      if (it == best.end() || t < it->second) best[id] = t;
    }
  }
  std::vector<double> raw;
  raw.reserve(records.size());
  for (const auto& r : records) {
    raw.push_back(100.0 * geomean_ratio(r, best, min_overlap));
  }
  double top = *std::max_element(raw.begin(), raw.end());
  for (double& p : raw) p = p * 100.0 / top;
  return raw;
}

std::vector<RankingEntry> rank(const std::vector<DeviceRecord>& records,
                               const std::vector<double>& percents) {
  if (records.size() != percents.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "records and percents length mismatch");
  }
  std::vector<RankingEntry> entries;
  entries.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    entries.push_back(RankingEntry{records[i], percents[i], 0});
  }
  std::sort(entries.begin(), entries.end(),
            [](const RankingEntry& a, const RankingEntry& b) {
              if (a.relative_perf_percent != b.relative_perf_percent) {
                return a.relative_perf_percent > b.relative_perf_percent;
              }
              if (a.record.soc_name != b.record.soc_name) {
                return a.record.soc_name < b.record.soc_name;
              }
              return a.record.device_name < b.record.device_name;
            });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].rank = static_cast<int>(i) + 1;
  }
  return entries;
}

int round_percent(double percent) {
  return static_cast<int>(percent >= 0 ? std::floor(percent + 0.5)
                                       : std::ceil(percent - 0.5));
}

}  // namespace nnbench::analytics
