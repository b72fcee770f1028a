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

#include "pairrank/elo.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "pairrank/errors.h"

namespace pairrank {
namespace {

struct IndexedMatch {
  std::size_t first;
  std::size_t second;
  double score;
};

void RunPass(const std::vector<IndexedMatch>& matches,
             std::span<const std::size_t> order, double k,
             std::vector<double>& ratings) {
  for (std::size_t m : order) {
    const IndexedMatch& match = matches[m];
    const double a = ratings[match.first];
    const double b = ratings[match.second];
    // Both sides see pre-match ratings; the transfer is zero-sum.
    const double delta = k * (match.score - EloExpected(a, b));
    ratings[match.first] = a + delta;
    ratings[match.second] = b - delta;
  }
}

}  // namespace

void Validate(const EloConfig& config) {
  if (!(config.k > 0.0) || !std::isfinite(config.k)) {
    throw ValidationError("elo k must be > 0");
  }
  if (config.permutations < 0) {
    throw ValidationError("elo permutations must be >= 0");
  }
  if (!std::isfinite(config.initial_rating)) {
    throw ValidationError("elo initial rating must be finite");
  }
}

double EloExpected(double theta_i, double theta_j) {
  return 1.0 / (1.0 + std::pow(10.0, (theta_j - theta_i) / 400.0));
}

double EloUpdate(double theta_i, double theta_j, double score, double k) {
  return theta_i + k * (score - EloExpected(theta_i, theta_j));
}

RankingResult EloRank(const Dataset& dataset, const EloConfig& config) {
  Validate(config);
  const std::size_t n = dataset.num_competitors();
  std::vector<IndexedMatch> matches;
  matches.reserve(dataset.num_matches());
  for (const MatchRecord& m : dataset.matches()) {
    matches.push_back({dataset.IndexOf(m.first), dataset.IndexOf(m.second),
                       FirstScore(m.outcome)});
  }

  std::vector<std::size_t> order(matches.size());
  std::iota(order.begin(), order.end(), 0);

  std::vector<double> mean(n, config.initial_rating);
  std::vector<double> spread(n, 0.0);
  if (config.permutations == 0) {
    RunPass(matches, order, config.k, mean);
  } else {
    // Passes are reduced in index order with Welford's update.
    std::vector<double> m2(n, 0.0);
    std::fill(mean.begin(), mean.end(), 0.0);
    std::vector<double> ratings(n);
    for (int pass = 0; pass < config.permutations; ++pass) {
      std::iota(order.begin(), order.end(), 0);
      std::mt19937_64 rng(DeriveSeed(config.seed, pass));
      std::shuffle(order.begin(), order.end(), rng);
      std::fill(ratings.begin(), ratings.end(), config.initial_rating);
      RunPass(matches, order, config.k, ratings);
      for (std::size_t i = 0; i < n; ++i) {
        const double delta = ratings[i] - mean[i];
        mean[i] += delta / (pass + 1);
        m2[i] += delta * (ratings[i] - mean[i]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      spread[i] = std::sqrt(m2[i] / config.permutations);
    }
  }

  std::map<CompetitorId, Rating> ratings;
  for (std::size_t i = 0; i < n; ++i) {
    ratings.emplace(dataset.roster()[i], Rating{mean[i], std::nullopt});
  }
  RankingResult result = MakeRankingResult(Algorithm::kElo, std::move(ratings));
  result.hyperparameters = {{"k", config.k},
                            {"initial_rating", config.initial_rating},
                            {"permutations", config.permutations}};
  result.seed = static_cast<std::int64_t>(config.seed);
  for (std::size_t i = 0; i < n; ++i) {
    if (dataset.Totals(i).matches() == 0) {
      result.unrated.push_back(dataset.roster()[i]);
    }
    if (config.permutations > 0) {
      result.rating_std.emplace(dataset.roster()[i], spread[i]);
    }
  }
  return result;
}

}  // namespace pairrank
