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
#include <random>

#include "doctest.h"
#include "nnbench/analytics/analytics.hpp"
#include "nnbench/error.hpp"

using namespace nnbench;
using namespace nnbench::analytics;

namespace {

const char* kFloatFixture = NNBENCH_DATA_DIR "/fixtures/float_table.tsv";
const char* kQuantFixture = NNBENCH_DATA_DIR "/fixtures/quant_table.tsv";

// Two-record table built from published rows: Kirin 990 (baseline) and
// Kirin 810 float latencies.
std::vector<DeviceRecord> kirin_pair() {
  std::vector<std::string> tests{"t1", "t2", "t3", "t4", "t5", "t6"};
  std::vector<double> kirin990{6, 18, 37, 36, 42, 19};
  std::vector<double> kirin810{10, 34, 82, 72, 122, 42};
  DeviceRecord a{"Mate 30 Pro", "Kirin 990", "NPU", {}, {}};
  DeviceRecord b{"Nova 5", "Kirin 810", "NPU", {}, {}};
  for (std::size_t i = 0; i < tests.size(); ++i) {
    a.per_test_latency_ms[tests[i]] = kirin990[i];
    b.per_test_latency_ms[tests[i]] = kirin810[i];
  }
  return {a, b};
}

int percent_for(const std::vector<DeviceRecord>& records,
                const std::vector<double>& percents, const std::string& soc) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].soc_name.rfind(soc, 0) == 0) {
      return round_percent(percents[i]);
    }
  }
  FAIL(("soc not found: " + soc));
  return -1;
}

}  // namespace

TEST_CASE("float fixture ingests 24 records with 6 latency columns") {
  auto records = ingest_table_file(kFloatFixture);
  CHECK(records.size() == 24);
  for (const auto& r : records) {
    CHECK(r.per_test_latency_ms.size() == 6);
    CHECK(r.metadata.count("published_relative_perf") == 1);
    for (const auto& [id, ms] : r.per_test_latency_ms) CHECK(ms > 0);
  }
}

TEST_CASE("quantized fixture ingests records with 5 latency columns") {
  auto records = ingest_table_file(kQuantFixture);
  CHECK(records.size() == 25);
  for (const auto& r : records) {
    CHECK(r.per_test_latency_ms.size() == 5);
  }
}

TEST_CASE("published float anchors reproduce under the top-record policy") {
  auto records = ingest_table_file(kFloatFixture);
  auto percents = relative_performance(records, BaselinePolicy::kTopRecord);
  CHECK(percent_for(records, percents, "Kirin 990") == 100);
  CHECK(std::abs(percent_for(records, percents, "Kirin 810") - 47) <=
        2);
  CHECK(std::abs(percent_for(records, percents,
                             "Snapdragon 855 Plus") -
                 32) <= 2);
}

TEST_CASE("published quantized anchors reproduce under the top-record policy") {
  auto records = ingest_table_file(kQuantFixture);
  auto percents = relative_performance(records, BaselinePolicy::kTopRecord);
  CHECK(percent_for(records, percents, "Snapdragon 855 Plus") == 100);
  CHECK(std::abs(percent_for(records, percents, "Tiger T710") - 99) <=
        2);
  CHECK(std::abs(percent_for(records, percents, "Kirin 990") - 86) <=
        2);
}

TEST_CASE("the Kirin anchor pair evaluates to 47 percent") {
  auto records = kirin_pair();
  auto percents = relative_performance(records, BaselinePolicy::kTopRecord);
  CHECK(round_percent(percents[0]) == 100);
  CHECK(std::abs(round_percent(percents[1]) - 47) <= 2);
}

TEST_CASE("baseline against itself is exactly 100") {
  auto records = kirin_pair();
  records.resize(1);
  auto percents = relative_performance(records, BaselinePolicy::kTopRecord);
  CHECK(percents[0] == 100.0);
}

TEST_CASE("relative performance is scale invariant") {
  auto records = ingest_table_file(kFloatFixture);
  auto base = relative_performance(records, BaselinePolicy::kTopRecord);
  auto scaled_records = records;
  for (auto& r : scaled_records) {
    for (auto& [id, ms] : r.per_test_latency_ms) ms *= 3.7;
  }
  auto scaled = relative_performance(scaled_records,
                                     BaselinePolicy::kTopRecord);
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(scaled[i] == doctest::Approx(base[i]).epsilon(1e-9));
  }
}

TEST_CASE("top-record policy has a unique 100-percent fixed point") {
  for (const char* fixture : {kFloatFixture, kQuantFixture}) {
    auto records = ingest_table_file(fixture);
    auto percents = relative_performance(records, BaselinePolicy::kTopRecord);
    int at_100 = 0;
    for (double p : percents) {
      CHECK(p <= 100.0 + 1e-9);
      if (std::abs(p - 100.0) < 1e-9) ++at_100;
    }
    CHECK(at_100 == 1);
  }
}

TEST_CASE("per-test-best policy rescales so the best record is 100") {
  auto records = ingest_table_file(kFloatFixture);
  auto percents = relative_performance(records, BaselinePolicy::kPerTestBest);
  double best = 0.0;
  for (double p : percents) best = std::max(best, p);
  CHECK(best == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("geomean ratios match a log-domain oracle") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(1.0, 500.0);
  std::vector<std::string> tests{"t1", "t2", "t3", "t4", "t5"};
  std::vector<DeviceRecord> records;
  for (int d = 0; d < 6; ++d) {
    DeviceRecord r{"device" + std::to_string(d), "soc" + std::to_string(d),
                   "", {}, {}};
    for (const auto& t : tests) r.per_test_latency_ms[t] = dist(rng);
    records.push_back(r);
  }
  auto percents = relative_performance(records, BaselinePolicy::kTopRecord);

  // Find the baseline: the record whose own percent is 100.
  std::size_t baseline = 0;
  for (std::size_t i = 0; i < percents.size(); ++i) {
    if (std::abs(percents[i] - 100.0) < 1e-9) baseline = i;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    double log_sum = 0.0;
    for (const auto& t : tests) {
      log_sum += std::log(records[baseline].per_test_latency_ms.at(t) /
                          records[i].per_test_latency_ms.at(t));
    }
    double oracle = 100.0 * std::exp(log_sum / 5.0);
    CHECK(percents[i] == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("rank orders by percent with the declared tie-break") {
  auto records = ingest_table_file(kFloatFixture);
  auto percents = relative_performance(records, BaselinePolicy::kTopRecord);
  auto ranking = rank(records, percents);
  REQUIRE(ranking.size() == records.size());
  CHECK(ranking[0].record.soc_name == "Kirin 990");
  CHECK(ranking[0].rank == 1);
  for (std::size_t i = 1; i < ranking.size(); ++i) {
    CHECK(ranking[i].rank == static_cast<int>(i) + 1);
    CHECK(ranking[i].relative_perf_percent <=
          ranking[i - 1].relative_perf_percent);
  }

  std::vector<DeviceRecord> tied{
      {"dev1", "soc_b", "", {{"t1", 10.0}}, {}},
      {"dev2", "soc_a", "", {{"t1", 10.0}}, {}},
  };
  auto tied_ranking = rank(tied, {50.0, 50.0});
  CHECK(tied_ranking[0].record.soc_name == "soc_a");

  auto single = rank({records[0]}, {100.0});
  CHECK(single[0].rank == 1);
}

TEST_CASE("ingest rejects malformed tables") {
  try {
    ingest_table("device_name\tsoc_name\tt1\nphone\tsoc\tfast\n");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }

  CHECK_THROWS_AS(
      ingest_table("device_name\tsoc_name\tt1\n"
                   "phone\tsoc\t1\nphone\tsoc\t2\n"),
      Error);  // duplicate (device, soc)
  CHECK_THROWS_AS(ingest_table(""), Error);
  CHECK_THROWS_AS(ingest_table("soc_name\tt1\nsoc\t1\n"), Error);
}

TEST_CASE("blank cells become absent entries and comma tables work") {
  auto records = ingest_table(
      "device_name,soc_name,accelerator,t1,t2,meta:note\n"
      "phone,soc1,NPU,5,,hello\n"
      "tablet,soc2,GPU,10,20,\n");
  REQUIRE(records.size() == 2);
  CHECK(records[0].per_test_latency_ms.size() == 1);
  CHECK(records[0].metadata.at("note") == "hello");
  CHECK(records[1].per_test_latency_ms.size() == 2);
  CHECK(records[1].accelerator == "GPU");
}

TEST_CASE("min_overlap rejections name the record") {
  std::vector<DeviceRecord> records{
      {"full", "soc_full", "", {{"t1", 1.0}, {"t2", 1.0}, {"t3", 1.0},
                                {"t4", 1.0}}, {}},
      {"sparse", "soc_sparse", "", {{"t1", 2.0}}, {}},
  };
  try {
    relative_performance(records, BaselinePolicy::kTopRecord, 4);
    FAIL("expected overlap error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("sparse") != std::string::npos);
  }
  CHECK_NOTHROW(relative_performance(records, BaselinePolicy::kTopRecord, 1));
}

TEST_CASE("round_percent rounds half away from zero") {
  CHECK(round_percent(46.5) == 47);
  CHECK(round_percent(46.4) == 46);
  CHECK(round_percent(0.5) == 1);
  CHECK(round_percent(-0.5) == -1);
  CHECK(round_percent(99.5) == 100);
}

TEST_CASE("policy names parse") {
  CHECK(policy_from_string("top-record") == BaselinePolicy::kTopRecord);
  CHECK(policy_from_string("per-test-best") == BaselinePolicy::kPerTestBest);
  CHECK_THROWS_AS(policy_from_string("best-effort"), Error);
}
