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

#include "pairrank/dataset_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "pairrank/errors.h"

namespace pairrank {
namespace {

constexpr std::string_view kCsvHeader = "first,second,outcome";

void StripCarriageReturn(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> SplitCommas(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

Outcome ParseOutcomeOrThrow(std::string_view token, std::size_t line_number) {
  if (auto outcome = ParseOutcomeToken(token)) return *outcome;
  throw ParseError("unknown outcome token '" + std::string(token) +
                       "' (expected first, second or tie)",
                   line_number);
}

std::vector<MatchRecord> ReadCsv(std::istream& in) {
  std::vector<MatchRecord> matches;
  std::string line;
  std::size_t line_number = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    StripCarriageReturn(line);
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != kCsvHeader) {
        throw ParseError("expected header '" + std::string(kCsvHeader) +
                             "', got '" + line + "'",
                         line_number);
      }
      seen_header = true;
      continue;
    }
    std::vector<std::string> fields = SplitCommas(line);
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, got " +
                           std::to_string(fields.size()),
                       line_number);
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError("empty competitor id", line_number);
    }
    if (fields[0] == fields[1]) {
      throw ParseError("self-match for '" + fields[0] + "'", line_number);
    }
    Outcome outcome = ParseOutcomeOrThrow(fields[2], line_number);
    matches.push_back(MatchRecord{std::move(fields[0]), std::move(fields[1]),
                                  outcome, matches.size()});
  }
  if (!seen_header) throw ParseError("missing csv header", 0);
  return matches;
}

std::string StringField(const nlohmann::json& object, const char* key,
                        std::size_t line_number) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    throw ParseError(std::string("missing string field \"") + key + "\"",
                     line_number);
  }
  return it->get<std::string>();
}

std::vector<MatchRecord> ReadJsonl(std::istream& in) {
  std::vector<MatchRecord> matches;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    StripCarriageReturn(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json object;
    try {
      object = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid json: ") + e.what(), line_number);
    }
    if (!object.is_object()) {
      throw ParseError("expected a json object", line_number);
    }
    std::string first = StringField(object, "first", line_number);
    std::string second = StringField(object, "second", line_number);
    if (first.empty() || second.empty()) {
      throw ParseError("empty competitor id", line_number);
    }
    if (first == second) {
      throw ParseError("self-match for '" + first + "'", line_number);
    }
    Outcome outcome = ParseOutcomeOrThrow(
        StringField(object, "outcome", line_number), line_number);
    matches.push_back(MatchRecord{std::move(first), std::move(second), outcome,
                                  matches.size()});
  }
  return matches;
}

}  // namespace

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name) {
  if (name == "csv") return DatasetFormat::kCsv;
  if (name == "jsonl") return DatasetFormat::kJsonl;
  return std::nullopt;
}

Dataset ReadDataset(std::istream& in, DatasetFormat format) {
  std::vector<MatchRecord> matches =
      format == DatasetFormat::kCsv ? ReadCsv(in) : ReadJsonl(in);
  return Dataset::FromMatches(std::move(matches));
}

Dataset LoadDataset(const std::string& path, DatasetFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open dataset file '" + path + "'");
  return ReadDataset(in, format);
}

void WriteDataset(std::ostream& out, const Dataset& dataset,
                  DatasetFormat format) {
  if (format == DatasetFormat::kCsv) {
    out << kCsvHeader << '\n';
    for (const MatchRecord& m : dataset.matches()) {
      out << m.first << ',' << m.second << ',' << OutcomeToken(m.outcome)
          << '\n';
    }
    return;
  }
  for (const MatchRecord& m : dataset.matches()) {
    nlohmann::json object = {{"first", m.first},
                             {"second", m.second},
                             {"outcome", OutcomeToken(m.outcome)}};
    out << object.dump() << '\n';
  }
}

void SaveDataset(const std::string& path, const Dataset& dataset,
                 DatasetFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write dataset file '" + path + "'");
  WriteDataset(out, dataset, format);
}

}  // namespace pairrank
