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

// Structured reports: a JSON document with fixed sections plus flat CSV
// companions, one per table. Floating-point values are written with six
// decimal places so reports are byte-stable for a given input and seed.

#ifndef PAIRRANK_REPORT_H_
#define PAIRRANK_REPORT_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "pairrank/core.h"
#include "pairrank/experiments.h"
#include "pairrank/metrics.h"

namespace pairrank {

struct CsvTable {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Sections that do not apply to a report are null.
struct Report {
  nlohmann::json meta = nlohmann::json::object();
  nlohmann::json transitivity;
  nlohmann::json f1;
  nlohmann::json correlations;
  nlohmann::json sweep;
  nlohmann::json permutation;
  std::vector<CsvTable> tables;

  nlohmann::json ToJson() const;
};

// "%.6f"; "null" for non-finite values.
std::string FormatDecimal(double value);

// Pretty-printed with two-space indent; floats via FormatDecimal, integers
// verbatim. Ends with a newline.
std::string FormatJson(const nlohmann::json& value);

nlohmann::json RankingToJson(const RankingResult& result);
nlohmann::json F1ToJson(const F1Report& report);

Report BuildEvaluationReport(const AlgorithmEvaluation& evaluation,
                             std::size_t triples, std::size_t train_matches,
                             std::size_t test_matches, nlohmann::json meta);
Report BuildComparisonReport(const ComparisonReport& comparison,
                             nlohmann::json meta);
Report BuildSweepReport(const SweepReport& sweep, nlohmann::json meta);
Report BuildPermutationReport(const PermutationReport& study,
                              nlohmann::json meta);

void WriteCsv(std::ostream& out, const CsvTable& table);

// report.json -> report.<table>.csv next to it.
std::string CompanionPath(const std::string& report_path,
                          const std::string& table);

// Writes the JSON document to `path` and every table to its companion path.
void SaveReport(const std::string& path, const Report& report);

}  // namespace pairrank

#endif  // PAIRRANK_REPORT_H_
