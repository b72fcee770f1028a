// Copyright 2026 The pairrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pairrank/report.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "pairrank/simulator.h"

namespace pairrank {
namespace {

using nlohmann::json;

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(FormatDecimalTest, SixPlaces) {
  EXPECT_EQ(FormatDecimal(0.5), "0.500000");
  EXPECT_EQ(FormatDecimal(2.0 / 3), "0.666667");
  EXPECT_EQ(FormatDecimal(-1234.5), "-1234.500000");
  EXPECT_EQ(FormatDecimal(-0.0), "0.000000");
  EXPECT_EQ(FormatDecimal(-1e-9), "0.000000");
  EXPECT_EQ(FormatDecimal(std::numeric_limits<double>::quiet_NaN()), "null");
  EXPECT_EQ(FormatDecimal(std::numeric_limits<double>::infinity()), "null");
}

TEST(FormatJsonTest, FloatsAndIntegers) {
  const json value = {{"a", 1}, {"b", 0.25}, {"c", {1.0, nullptr}}, {"d", "x"}};
  EXPECT_EQ(FormatJson(value),
            "{\n  \"a\": 1,\n  \"b\": 0.250000,\n  \"c\": [\n    1.000000,\n"
            "    null\n  ],\n  \"d\": \"x\"\n}\n");
  EXPECT_EQ(FormatJson(json::object()), "{}\n");
}

TEST(WriteCsvTest, QuotesWhenNeeded) {
  const CsvTable table{"t", {"a", "b"}, {{"plain", "has,comma"}, {"say \"hi\"", ""}}};
  std::ostringstream out;
  WriteCsv(out, table);
  EXPECT_EQ(out.str(), "a,b\nplain,\"has,comma\"\n\"say \"\"hi\"\"\",\n");
}

TEST(CompanionPathTest, ReplacesExtension) {
  EXPECT_EQ(CompanionPath("out/report.json", "f1"), "out/report.f1.csv");
  EXPECT_EQ(CompanionPath("report", "sweep"), "report.sweep.csv");
}

ComparisonReport SmallComparison() {
  SimConfig config;
  config.n_matches = 600;
  config.n_competitors = 5;
  config.seed = 2;
  const Dataset d = Generate(config).dataset;
  const std::vector<Algorithm> algorithms = {Algorithm::kElo, Algorithm::kBradleyTerry};
  return CompareAlgorithms(d, algorithms, 9, AlgorithmSettings{});
}

TEST(BuildReportTest, ComparisonSections) {
  const Report report = BuildComparisonReport(SmallComparison(), {{"command", "compare"}});
  const json doc = report.ToJson();
  for (const char* key :
       {"meta", "transitivity", "f1", "correlations", "sweep", "permutation"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_TRUE(doc["sweep"].is_null());
  EXPECT_TRUE(doc["permutation"].is_null());
  EXPECT_EQ(doc["meta"]["split_seed"], 9);
  EXPECT_EQ(doc["correlations"]["algorithms"],
            json({"elo", "bradley-terry", "winrate"}));
  EXPECT_EQ(doc["correlations"]["matrix"].size(), 3u);
  EXPECT_EQ(doc["f1"]["algorithms"].size(), 3u);
  std::vector<std::string> names;
  for (const CsvTable& table : report.tables) names.push_back(table.name);
  EXPECT_NE(std::find(names.begin(), names.end(), "correlations"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "f1"), names.end());
}

TEST(BuildReportTest, SweepAndPermutation) {
  SimConfig config;
  config.n_matches = 400;
  config.n_competitors = 4;
  const Dataset d = Generate(config).dataset;
  SweepSpec spec;
  spec.values = {2, 4, 8};
  const json sweep = BuildSweepReport(RunSweep(d, spec), {}).ToJson();
  EXPECT_EQ(sweep["sweep"]["parameter"], "k");
  EXPECT_EQ(sweep["sweep"]["points"].size(), 3u);

  const std::vector<double> ks = {3};
  const std::vector<int> counts = {1, 10};
  const Report perm = BuildPermutationReport(RunPermutationStudy(d, ks, counts, 1), {});
  EXPECT_FALSE(perm.ToJson()["permutation"].is_null());
  ASSERT_EQ(perm.tables.size(), 1u);
  EXPECT_EQ(perm.tables[0].rows.size(), 2u * 4u);
}

TEST(RankingToJsonTest, Fields) {
  std::map<CompetitorId, Rating> ratings = {{"A", {1.5, 0.25}}, {"B", {0.5, std::nullopt}}};
  RankingResult r = MakeRankingResult(Algorithm::kGlicko, ratings);
  const json doc = RankingToJson(r);
  EXPECT_EQ(doc["algorithm"], "glicko");
  EXPECT_EQ(doc["order"], json({"A", "B"}));
  EXPECT_EQ(doc["ratings"][0]["rank"], 1);
  EXPECT_EQ(doc["ratings"][0]["sigma"], 0.25);
  EXPECT_TRUE(doc["ratings"][1]["sigma"].is_null());
}

TEST(SaveReportTest, WritesDocumentAndCompanions) {
  const auto dir = std::filesystem::temp_directory_path() / "pairrank_report_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const Report report = BuildComparisonReport(SmallComparison(), {});
  const std::string path = (dir / "cmp.json").string();
  SaveReport(path, report);
  EXPECT_EQ(Slurp(path), FormatJson(report.ToJson()));
  for (const CsvTable& table : report.tables) {
    const std::string companion = CompanionPath(path, table.name);
    ASSERT_TRUE(std::filesystem::exists(companion)) << companion;
    std::ostringstream expected;
    WriteCsv(expected, table);
    EXPECT_EQ(Slurp(companion), expected.str());
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace pairrank
