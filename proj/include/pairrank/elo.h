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

// Sequential Elo rating with optional averaging over shuffled match orders.

#ifndef PAIRRANK_ELO_H_
#define PAIRRANK_ELO_H_

#include <cstdint>

#include "pairrank/core.h"

namespace pairrank {

struct EloConfig {
  double k = 4.0;
  double initial_rating = 1000.0;
  // 0 runs a single pass in dataset order. P >= 1 runs P passes over
  // independently shuffled orders and reports the mean rating per competitor.
  int permutations = 0;
  std::uint64_t seed = 0;
};

// Throws ValidationError unless k > 0, permutations >= 0 and the initial
// rating is finite.
void Validate(const EloConfig& config);

// Probability that i beats j on the 400-point logistic scale.
double EloExpected(double theta_i, double theta_j);

// New rating of i after scoring `score` (0, 0.5 or 1) against j.
double EloUpdate(double theta_i, double theta_j, double score, double k);

RankingResult EloRank(const Dataset& dataset, const EloConfig& config);

}  // namespace pairrank

#endif  // PAIRRANK_ELO_H_
