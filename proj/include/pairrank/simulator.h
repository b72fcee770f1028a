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

// Synthetic tournaments with Bradley-Terry outcomes and either uniform or
// heavy-tailed (Zipf popularity) pairings.

#ifndef PAIRRANK_SIMULATOR_H_
#define PAIRRANK_SIMULATOR_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "pairrank/core.h"

namespace pairrank {

enum class MatchupStyle {
  // Pair weight proportional to the product of Zipf popularity masses.
  kArena,
  // Uniform over unordered pairs.
  kControlled,
};

std::optional<MatchupStyle> ParseMatchupStyle(std::string_view name);
std::string_view MatchupStyleName(MatchupStyle style);

struct SimConfig {
  int n_competitors = 10;
  // Defaults to evenly spaced values over [-2, 2].
  std::optional<std::vector<double>> true_logits;
  std::int64_t n_matches = 1000;
  MatchupStyle style = MatchupStyle::kControlled;
  double skew_alpha = 1.2;
  double tie_rate = 0.0;
  std::uint64_t seed = 0;
};

void Validate(const SimConfig& config);

struct SimulatedDataset {
  Dataset dataset;
  std::map<CompetitorId, double> ground_truth;
};

// Competitors are named c00, c01, ... (zero-padded so names sort in index
// order). In arena style popularity ranks are a seeded shuffle of the
// competitors, independent of strength. Throws ValidationError for fewer
// than two competitors.
SimulatedDataset Generate(const SimConfig& config);

// CSV sidecar with header `competitor,logit`.
void WriteGroundTruth(std::ostream& out,
                      const std::map<CompetitorId, double>& ground_truth);

// Ranking result whose theta values are the true logits, for comparing
// fitted orders against the generating order.
RankingResult GroundTruthRanking(const std::map<CompetitorId, double>& truth);

}  // namespace pairrank

#endif  // PAIRRANK_SIMULATOR_H_
