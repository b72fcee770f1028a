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

#include "pairrank/glicko.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "pairrank/errors.h"

namespace pairrank {

void Validate(const GlickoConfig& config) {
  if (!(config.initial_rd > 0.0) || !std::isfinite(config.initial_rd)) {
    throw ValidationError("glicko initial rd must be > 0");
  }
  if (!(config.min_rd >= 0.0)) {
    throw ValidationError("glicko min rd must be >= 0");
  }
  if (config.min_rd > config.initial_rd) {
    throw ValidationError("glicko min rd must not exceed initial rd");
  }
  if (!std::isfinite(config.initial_rating)) {
    throw ValidationError("glicko initial rating must be finite");
  }
}

double GlickoG(double sigma) {
  constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
  return 1.0 / std::sqrt(1.0 + 3.0 * kGlickoQ * kGlickoQ * sigma * sigma / kPi2);
}

double GlickoExpected(double theta_i, double theta_j, double sigma_j) {
  return 1.0 /
         (1.0 + std::pow(10.0, -GlickoG(sigma_j) * (theta_i - theta_j) / 400.0));
}

Rating GlickoUpdate(const Rating& rating,
                    std::span<const GlickoOpponent> opponents, double min_rd) {
  if (opponents.empty()) {
    throw ValidationError("glicko update needs at least one opponent");
  }
  const double sigma = rating.sigma.value_or(0.0);
  double information = 0.0;  // 1 / d^2
  double innovation = 0.0;
  for (const GlickoOpponent& opponent : opponents) {
    const double g = GlickoG(opponent.rating.sigma.value_or(0.0));
    const double p = GlickoExpected(rating.theta, opponent.rating.theta,
                                    opponent.rating.sigma.value_or(0.0));
    information += kGlickoQ * kGlickoQ * g * g * p * (1.0 - p);
    innovation += g * (opponent.score - p);
  }
  // sigma = 0 means infinite prior precision: the rating is frozen.
  if (sigma == 0.0) return Rating{rating.theta, 0.0};
  const double precision = 1.0 / (sigma * sigma) + information;
  const double theta = rating.theta + kGlickoQ / precision * innovation;
  const double new_sigma = std::max(std::sqrt(1.0 / precision), min_rd);
  return Rating{theta, std::min(new_sigma, sigma)};
}

RankingResult GlickoRank(const Dataset& dataset, const GlickoConfig& config) {
  Validate(config);
  const std::size_t n = dataset.num_competitors();
  std::vector<Rating> ratings(n, Rating{config.initial_rating, config.initial_rd});
  for (const MatchRecord& m : dataset.matches()) {
    const std::size_t a = dataset.IndexOf(m.first);
    const std::size_t b = dataset.IndexOf(m.second);
    const double score = FirstScore(m.outcome);
    const GlickoOpponent vs_b{ratings[b], score};
    const GlickoOpponent vs_a{ratings[a], 1.0 - score};
    const Rating next_a = GlickoUpdate(ratings[a], {&vs_b, 1}, config.min_rd);
    const Rating next_b = GlickoUpdate(ratings[b], {&vs_a, 1}, config.min_rd);
    ratings[a] = next_a;
    ratings[b] = next_b;
  }

  std::map<CompetitorId, Rating> by_id;
  for (std::size_t i = 0; i < n; ++i) by_id.emplace(dataset.roster()[i], ratings[i]);
  RankingResult result = MakeRankingResult(Algorithm::kGlicko, std::move(by_id));
  result.hyperparameters = {{"initial_rating", config.initial_rating},
                            {"initial_rd", config.initial_rd},
                            {"min_rd", config.min_rd}};
  for (std::size_t i = 0; i < n; ++i) {
    if (dataset.Totals(i).matches() == 0) {
      result.unrated.push_back(dataset.roster()[i]);
    }
  }
  return result;
}

}  // namespace pairrank
