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

#include "pairrank/simulator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>

#include "pairrank/bradley_terry.h"
#include "pairrank/errors.h"

namespace pairrank {
namespace {

std::string CompetitorName(int index, int count) {
  const int width = std::max(2, static_cast<int>(std::to_string(count - 1).size()));
  std::string digits = std::to_string(index);
  return "c" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

std::optional<MatchupStyle> ParseMatchupStyle(std::string_view name) {
  if (name == "arena") return MatchupStyle::kArena;
  if (name == "controlled") return MatchupStyle::kControlled;
  return std::nullopt;
}

std::string_view MatchupStyleName(MatchupStyle style) {
  return style == MatchupStyle::kArena ? "arena" : "controlled";
}

void Validate(const SimConfig& config) {
  if (config.n_competitors < 2) {
    throw ValidationError("simulation needs at least 2 competitors");
  }
  if (config.n_matches < 1) {
    throw ValidationError("simulation needs at least 1 match");
  }
  if (config.true_logits &&
      config.true_logits->size() != static_cast<std::size_t>(config.n_competitors)) {
    throw ValidationError("expected " + std::to_string(config.n_competitors) +
                          " true logits, got " +
                          std::to_string(config.true_logits->size()));
  }
  if (!(config.skew_alpha > 0.0)) {
    throw ValidationError("skew alpha must be > 0");
  }
  if (!(config.tie_rate >= 0.0 && config.tie_rate < 1.0)) {
    throw ValidationError("tie rate must lie in [0, 1)");
  }
}

SimulatedDataset Generate(const SimConfig& config) {
  Validate(config);
  const int n = config.n_competitors;
  std::vector<double> logits;
  if (config.true_logits) {
    logits = *config.true_logits;
  } else {
    for (int i = 0; i < n; ++i) logits.push_back(-2.0 + 4.0 * i / (n - 1));
  }
  std::vector<CompetitorId> names;
  for (int i = 0; i < n; ++i) names.push_back(CompetitorName(i, n));

  std::mt19937_64 rng(config.seed);

  // Unordered pairs (a < b) and their sampling weights.
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> weights;
  std::vector<double> popularity(n, 1.0);
  if (config.style == MatchupStyle::kArena) {
    std::vector<int> rank(n);
    std::iota(rank.begin(), rank.end(), 1);
    std::shuffle(rank.begin(), rank.end(), rng);
    for (int i = 0; i < n; ++i) {
      popularity[i] = std::pow(static_cast<double>(rank[i]), -config.skew_alpha);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      pairs.emplace_back(a, b);
      weights.push_back(popularity[a] * popularity[b]);
    }
  }
  std::discrete_distribution<std::size_t> pick_pair(weights.begin(), weights.end());
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution tie(config.tie_rate);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<MatchRecord> matches;
  matches.reserve(static_cast<std::size_t>(config.n_matches));
  for (std::int64_t m = 0; m < config.n_matches; ++m) {
    auto [a, b] = pairs[pick_pair(rng)];
    if (coin(rng)) std::swap(a, b);
    const double p_first = BtProbability(logits[a], logits[b]);
    Outcome outcome = unit(rng) < p_first ? Outcome::kFirstWins
                                          : Outcome::kSecondWins;
    if (config.tie_rate > 0.0 && tie(rng)) outcome = Outcome::kTie;
    matches.push_back(MatchRecord{names[a], names[b], outcome,
                                  static_cast<std::uint64_t>(m)});
  }

  SimulatedDataset result;
  result.dataset = Dataset::FromMatches(std::move(matches), names);
  for (int i = 0; i < n; ++i) result.ground_truth.emplace(names[i], logits[i]);
  return result;
}

void WriteGroundTruth(std::ostream& out,
                      const std::map<CompetitorId, double>& ground_truth) {
  out << "competitor,logit\n";
  char buffer[64];
  for (const auto& [id, logit] : ground_truth) {
    std::snprintf(buffer, sizeof(buffer), "%.6f", logit);
    out << id << ',' << buffer << '\n';
  }
}

RankingResult GroundTruthRanking(const std::map<CompetitorId, double>& truth) {
  std::map<CompetitorId, Rating> ratings;
  for (const auto& [id, logit] : truth) ratings.emplace(id, Rating{logit, std::nullopt});
  return MakeRankingResult(Algorithm::kBradleyTerry, std::move(ratings));
}

}  // namespace pairrank
