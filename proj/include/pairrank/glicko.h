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

// Glicko-1 rating with per-match updates and no deviation inflation between
// matches.

#ifndef PAIRRANK_GLICKO_H_
#define PAIRRANK_GLICKO_H_

#include <span>

#include "pairrank/core.h"

namespace pairrank {

// ln(10) / 400.
inline constexpr double kGlickoQ = 0.0057564627324851142;

struct GlickoConfig {
  double initial_rating = 1500.0;
  double initial_rd = 350.0;
  // Deviation never shrinks below this floor.
  double min_rd = 30.0;
};

// Throws ValidationError unless initial_rd > 0 and 0 <= min_rd <= initial_rd.
void Validate(const GlickoConfig& config);

// Attenuation factor 1 / sqrt(1 + 3 q^2 sigma^2 / pi^2), in (0, 1].
double GlickoG(double sigma);

// Expected score of i against an opponent j whose rating deviation is
// sigma_j. Equals EloExpected when sigma_j is 0.
double GlickoExpected(double theta_i, double theta_j, double sigma_j);

struct GlickoOpponent {
  Rating rating;
  double score = 0.5;
};

// One rating-period update of `rating` against `opponents`, which must be
// non-empty and carry sigma. The deviation is floored at `min_rd` and never
// grows.
Rating GlickoUpdate(const Rating& rating,
                    std::span<const GlickoOpponent> opponents, double min_rd);

// Sequential pass in match order; each match updates both players from
// their pre-match ratings.
RankingResult GlickoRank(const Dataset& dataset, const GlickoConfig& config);

}  // namespace pairrank

#endif  // PAIRRANK_GLICKO_H_
