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

#ifndef PAIRRANK_DATASET_IO_H_
#define PAIRRANK_DATASET_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "pairrank/core.h"

namespace pairrank {

// csv: header `first,second,outcome`, one match per row.
// jsonl: one {"first": ..., "second": ..., "outcome": ...} object per line.
// Outcome tokens are `first`, `second` and `tie` in both formats. CRLF and LF
// line endings are accepted; blank lines are skipped.
enum class DatasetFormat { kCsv, kJsonl };

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name);

// Match order is preserved; sequence numbers are the 0-based row positions.
// Throws ParseError for malformed input and ValidationError for self-matches.
Dataset ReadDataset(std::istream& in, DatasetFormat format);
Dataset LoadDataset(const std::string& path, DatasetFormat format);

void WriteDataset(std::ostream& out, const Dataset& dataset,
                  DatasetFormat format);
void SaveDataset(const std::string& path, const Dataset& dataset,
                 DatasetFormat format);

}  // namespace pairrank

#endif  // PAIRRANK_DATASET_IO_H_
