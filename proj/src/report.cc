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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "pairrank/errors.h"

namespace pairrank {
namespace {

using nlohmann::json;

json Optional(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

std::string CsvNumber(const std::optional<double>& value) {
  return value ? FormatDecimal(*value) : std::string();
}

void AppendJson(std::string& out, const json& value, int depth) {
  const std::string pad(2 * depth, ' ');
  const std::string inner(2 * (depth + 1), ' ');
  switch (value.type()) {
    case json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + json(it.key()).dump() + ": ";
        AppendJson(out, it.value(), depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const json& element : value) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        AppendJson(out, element, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += FormatDecimal(value.get<double>());
      return;
    default:
      out += value.dump();
      return;
  }
}

json SigmaJson(const Rating& rating) {
  return rating.sigma ? json(*rating.sigma) : json(nullptr);
}

}  // namespace

json Report::ToJson() const {
  json document = json::object();
  document["meta"] = meta;
  document["transitivity"] = transitivity;
  document["f1"] = f1;
  document["correlations"] = correlations;
  document["sweep"] = sweep;
  document["permutation"] = permutation;
  return document;
}

std::string FormatDecimal(double value) {
  if (!std::isfinite(value)) return "null";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  std::string text(buffer);
  if (text == "-0.000000") text = "0.000000";
  return text;
}

std::string FormatJson(const json& value) {
  std::string out;
  AppendJson(out, value, 0);
  out += '\n';
  return out;
}

json RankingToJson(const RankingResult& result) {
  json ratings = json::array();
  for (std::size_t rank = 0; rank < result.order.size(); ++rank) {
    const CompetitorId& id = result.order[rank];
    const Rating& rating = result.ratings.at(id);
    json entry = {{"rank", rank + 1},
                  {"competitor", id},
                  {"theta", rating.theta},
                  {"sigma", SigmaJson(rating)}};
    auto spread = result.rating_std.find(id);
    if (spread != result.rating_std.end()) entry["rating_std"] = spread->second;
    ratings.push_back(std::move(entry));
  }
  json document = {{"algorithm", AlgorithmName(result.algorithm)},
                   {"hyperparameters", result.hyperparameters},
                   {"seed", result.seed ? json(*result.seed) : json(nullptr)},
                   {"ratings", std::move(ratings)},
                   {"order", result.order},
                   {"unrated", result.unrated},
                   {"diagnostics", result.diagnostics}};
  return document;
}

json F1ToJson(const F1Report& report) {
  json per_competitor = json::object();
  for (const auto& [id, entry] : report.per_competitor) {
    per_competitor[id] = {{"precision", entry.precision},
                          {"recall", entry.recall},
                          {"f1", entry.f1},
                          {"pairs", entry.pairs}};
  }
  return {{"overall_f1", report.overall_f1},
          {"per_competitor", std::move(per_competitor)},
          {"scored_sides", report.pairs.size()},
          {"excluded_pairs", report.excluded_pairs}};
}

namespace {

void AddEvaluationRows(Report& report, const std::vector<AlgorithmEvaluation>& rows,
                       std::size_t triples, std::size_t train_matches,
                       std::size_t test_matches) {
  json transitivity_rows = json::array();
  json f1_rows = json::array();
  CsvTable transitivity_table{"transitivity", {"algorithm", "transitivity"}, {}};
  CsvTable f1_table{"f1", {"algorithm", "overall_f1"}, {}};
  CsvTable per_competitor_table{
      "f1_per_competitor",
      {"algorithm", "competitor", "precision", "recall", "f1", "pairs"},
      {}};
  for (const AlgorithmEvaluation& row : rows) {
    const std::string name(AlgorithmName(row.algorithm));
    json t = {{"algorithm", name}, {"score", Optional(row.transitivity)}};
    if (row.full_fit) t["order"] = row.full_fit->order;
    if (!row.ok()) t["error"] = row.error;
    transitivity_rows.push_back(std::move(t));
    transitivity_table.rows.push_back({name, CsvNumber(row.transitivity)});

    json f = {{"algorithm", name}};
    if (row.f1) {
      f.update(F1ToJson(*row.f1));
      f1_table.rows.push_back({name, FormatDecimal(row.f1->overall_f1)});
      for (const auto& [id, entry] : row.f1->per_competitor) {
        per_competitor_table.rows.push_back(
            {name, id, FormatDecimal(entry.precision), FormatDecimal(entry.recall),
             FormatDecimal(entry.f1), std::to_string(entry.pairs)});
      }
    } else {
      f["overall_f1"] = nullptr;
      f1_table.rows.push_back({name, ""});
    }
    if (!row.ok()) f["error"] = row.error;
    f1_rows.push_back(std::move(f));
  }
  report.transitivity = {{"triples", triples}, {"algorithms", transitivity_rows}};
  report.f1 = {{"train_matches", train_matches},
               {"test_matches", test_matches},
               {"algorithms", f1_rows}};
  report.tables.push_back(std::move(transitivity_table));
  report.tables.push_back(std::move(f1_table));
  report.tables.push_back(std::move(per_competitor_table));
}

}  // namespace

Report BuildEvaluationReport(const AlgorithmEvaluation& evaluation,
                             std::size_t triples, std::size_t train_matches,
                             std::size_t test_matches, json meta) {
  Report report;
  report.meta = std::move(meta);
  AddEvaluationRows(report, {evaluation}, triples, train_matches, test_matches);
  return report;
}

Report BuildComparisonReport(const ComparisonReport& comparison, json meta) {
  Report report;
  report.meta = std::move(meta);
  report.meta["split_seed"] = comparison.split_seed;
  AddEvaluationRows(report, comparison.rows, comparison.triples,
                    comparison.train_matches, comparison.test_matches);

  json names = json::array();
  CsvTable table{"correlations", {"algorithm"}, {}};
  for (const AlgorithmEvaluation& row : comparison.rows) {
    names.push_back(AlgorithmName(row.algorithm));
    table.header.emplace_back(AlgorithmName(row.algorithm));
  }
  json matrix = json::array();
  for (std::size_t a = 0; a < comparison.rows.size(); ++a) {
    json line = json::array();
    std::vector<std::string> csv_row{
        std::string(AlgorithmName(comparison.rows[a].algorithm))};
    for (const auto& value : comparison.spearman[a]) {
      line.push_back(Optional(value));
      csv_row.push_back(CsvNumber(value));
    }
    matrix.push_back(std::move(line));
    table.rows.push_back(std::move(csv_row));
  }
  report.correlations = {{"method", "spearman"},
                         {"algorithms", std::move(names)},
                         {"matrix", std::move(matrix)}};
  report.tables.push_back(std::move(table));
  return report;
}

Report BuildSweepReport(const SweepReport& sweep, json meta) {
  Report report;
  report.meta = std::move(meta);
  json points = json::array();
  CsvTable table{"sweep", {"index", "value", "repeat", "overall_f1", "error"}, {}};
  for (const SweepPoint& point : sweep.points) {
    json entry = {{"index", point.index},
                  {"value", point.value},
                  {"repeat", point.repeat},
                  {"overall_f1", Optional(point.overall_f1)},
                  {"per_competitor_f1", point.per_competitor_f1}};
    if (!point.error.empty()) entry["error"] = point.error;
    points.push_back(std::move(entry));
    table.rows.push_back({std::to_string(point.index), FormatDecimal(point.value),
                          std::to_string(point.repeat),
                          CsvNumber(point.overall_f1), point.error});
  }
  report.sweep = {{"algorithm", AlgorithmName(sweep.algorithm)},
                  {"parameter", SweepParameterName(sweep.parameter)},
                  {"train_matches", sweep.train_matches},
                  {"test_matches", sweep.test_matches},
                  {"mean_f1", sweep.mean_f1},
                  {"dispersion", sweep.dispersion},
                  {"points", std::move(points)}};
  report.tables.push_back(std::move(table));
  return report;
}

Report BuildPermutationReport(const PermutationReport& study, json meta) {
  Report report;
  report.meta = std::move(meta);
  json cells = json::array();
  CsvTable table{"permutation",
                 {"k", "permutations", "competitor", "mean_rating", "rating_std",
                  "rating_sem", "rank", "unstable"},
                 {}};
  for (std::size_t a = 0; a < study.k_values.size(); ++a) {
    for (std::size_t b = 0; b < study.permutation_counts.size(); ++b) {
      const PermutationCell& cell = study.Cell(a, b);
      json competitors = json::array();
      for (const CompetitorId& id : cell.result.order) {
        const double mean = cell.result.ratings.at(id).theta;
        std::optional<double> spread;
        std::optional<double> sem;
        if (auto it = cell.result.rating_std.find(id);
            it != cell.result.rating_std.end()) {
          spread = it->second;
          sem = it->second / std::sqrt(static_cast<double>(cell.permutations));
        }
        const std::size_t rank = cell.result.RankOf(id) + 1;
        const bool unstable = study.unstable[a].at(id);
        competitors.push_back({{"competitor", id},
                               {"mean_rating", mean},
                               {"rating_std", Optional(spread)},
                               {"rating_sem", Optional(sem)},
                               {"rank", rank},
                               {"unstable", unstable}});
        table.rows.push_back({FormatDecimal(cell.k),
                              std::to_string(cell.permutations), id,
                              FormatDecimal(mean), CsvNumber(spread),
                              CsvNumber(sem), std::to_string(rank),
                              unstable ? "1" : "0"});
      }
      cells.push_back({{"k", cell.k},
                       {"permutations", cell.permutations},
                       {"competitors", std::move(competitors)}});
    }
  }
  json instability = json::array();
  for (std::size_t a = 0; a < study.k_values.size(); ++a) {
    json ids = json::array();
    for (const auto& [id, flag] : study.unstable[a]) {
      if (flag) ids.push_back(id);
    }
    instability.push_back({{"k", study.k_values[a]}, {"unstable", std::move(ids)}});
  }
  report.permutation = {{"k_values", study.k_values},
                        {"permutation_counts", study.permutation_counts},
                        {"cells", std::move(cells)},
                        {"instability", std::move(instability)}};
  report.tables.push_back(std::move(table));
  return report;
}

void WriteCsv(std::ostream& out, const CsvTable& table) {
  auto write_field = [&out](const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
      out << field;
      return;
    }
    out << '"';
    for (char c : field) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  };
  auto write_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      write_field(row[i]);
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
}

std::string CompanionPath(const std::string& report_path,
                          const std::string& table) {
  std::filesystem::path path(report_path);
  path.replace_extension();
  return path.string() + "." + table + ".csv";
}

void SaveReport(const std::string& path, const Report& report) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write report '" + path + "'");
    out << FormatJson(report.ToJson());
  }
  for (const CsvTable& table : report.tables) {
    const std::string table_path = CompanionPath(path, table.name);
    std::ofstream out(table_path, std::ios::binary);
    if (!out) throw ValidationError("cannot write table '" + table_path + "'");
    WriteCsv(out, table);
  }
}

}  // namespace pairrank
