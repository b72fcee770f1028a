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

#include "pairrank/core.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "pairrank/errors.h"

namespace pairrank {

double FirstScore(Outcome outcome) {
  switch (outcome) {
    case Outcome::kFirstWins:
      return 1.0;
    case Outcome::kSecondWins:
      return 0.0;
    case Outcome::kTie:
      return 0.5;
  }
  return 0.5;
}

std::string_view OutcomeToken(Outcome outcome) {
  switch (outcome) {
    case Outcome::kFirstWins:
      return "first";
    case Outcome::kSecondWins:
      return "second";
    case Outcome::kTie:
      return "tie";
  }
  return "tie";
}

std::optional<Outcome> ParseOutcomeToken(std::string_view token) {
  if (token == "first") return Outcome::kFirstWins;
  if (token == "second") return Outcome::kSecondWins;
  if (token == "tie") return Outcome::kTie;
  return std::nullopt;
}

Dataset Dataset::FromMatches(std::vector<MatchRecord> matches,
                             std::span<const CompetitorId> extra_roster) {
  std::set<CompetitorId> names(extra_roster.begin(), extra_roster.end());
  std::set<std::uint64_t> sequences;
  for (const MatchRecord& match : matches) {
    if (match.first.empty() || match.second.empty()) {
      throw ValidationError("match " + std::to_string(match.sequence) +
                            ": empty competitor id");
    }
    if (match.first == match.second) {
      throw ValidationError("match " + std::to_string(match.sequence) +
                            ": competitor '" + match.first +
                            "' cannot play itself");
    }
    if (!sequences.insert(match.sequence).second) {
      throw ValidationError("duplicate match sequence number " +
                            std::to_string(match.sequence));
    }
    names.insert(match.first);
    names.insert(match.second);
  }
  for (const CompetitorId& id : extra_roster) {
    if (id.empty()) throw ValidationError("empty competitor id in roster");
  }

  Dataset d;
  d.roster_.assign(names.begin(), names.end());
  for (std::size_t i = 0; i < d.roster_.size(); ++i) {
    d.index_.emplace(d.roster_[i], i);
  }
  const std::size_t n = d.roster_.size();
  d.tallies_.assign(n * n, PairTally{});
  d.totals_.assign(n, CompetitorTotals{});
  for (const MatchRecord& match : matches) {
    const std::size_t a = d.index_.at(match.first);
    const std::size_t b = d.index_.at(match.second);
    PairTally& ab = d.tallies_[a * n + b];
    PairTally& ba = d.tallies_[b * n + a];
    switch (match.outcome) {
      case Outcome::kFirstWins:
        ++ab.wins;
        ++ba.losses;
        ++d.totals_[a].wins;
        ++d.totals_[b].losses;
        break;
      case Outcome::kSecondWins:
        ++ab.losses;
        ++ba.wins;
        ++d.totals_[a].losses;
        ++d.totals_[b].wins;
        break;
      case Outcome::kTie:
        ++ab.ties;
        ++ba.ties;
        ++d.totals_[a].ties;
        ++d.totals_[b].ties;
        break;
    }
  }
  d.matches_ = std::move(matches);
  return d;
}

std::optional<std::size_t> Dataset::FindIndex(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Dataset::IndexOf(std::string_view id) const {
  if (auto index = FindIndex(id)) return *index;
  throw ValidationError("unknown competitor '" + std::string(id) + "'");
}

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(base),
                    static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::pair<Dataset, Dataset> SplitDataset(const Dataset& dataset,
                                         double train_fraction,
                                         std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ValidationError("train fraction must lie in (0, 1), got " +
                          std::to_string(train_fraction));
  }
  const std::size_t n = dataset.num_matches();
  if (n < 2) {
    throw ValidationError("cannot split a dataset with fewer than 2 matches");
  }
  const auto train_size =
      static_cast<std::size_t>(std::llround(train_fraction * n));

  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(indices.begin(), indices.end(), rng);

  std::vector<bool> in_train(n, false);
  for (std::size_t i = 0; i < train_size; ++i) in_train[indices[i]] = true;

  std::vector<MatchRecord> train;
  std::vector<MatchRecord> test;
  train.reserve(train_size);
  test.reserve(n - train_size);
  for (std::size_t i = 0; i < n; ++i) {
    (in_train[i] ? train : test).push_back(dataset.matches()[i]);
  }
  return {Dataset::FromMatches(std::move(train), dataset.roster()),
          Dataset::FromMatches(std::move(test), dataset.roster())};
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kElo:
      return "elo";
    case Algorithm::kBradleyTerry:
      return "bradley-terry";
    case Algorithm::kGlicko:
      return "glicko";
    case Algorithm::kMarkov:
      return "markov";
    case Algorithm::kWinRate:
      return "winrate";
  }
  return "winrate";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "elo") return Algorithm::kElo;
  if (name == "bradley-terry" || name == "bt") return Algorithm::kBradleyTerry;
  if (name == "glicko") return Algorithm::kGlicko;
  if (name == "markov") return Algorithm::kMarkov;
  if (name == "winrate" || name == "win-rate") return Algorithm::kWinRate;
  return std::nullopt;
}

const Rating& RankingResult::RatingOf(std::string_view id) const {
  auto it = ratings.find(std::string(id));
  if (it == ratings.end()) {
    throw ValidationError("unknown competitor '" + std::string(id) + "'");
  }
  return it->second;
}

std::size_t RankingResult::RankOf(std::string_view id) const {
  auto it = std::find(order.begin(), order.end(), id);
  if (it == order.end()) {
    throw ValidationError("unknown competitor '" + std::string(id) + "'");
  }
  return static_cast<std::size_t>(it - order.begin());
}

std::vector<CompetitorId> OrderByTheta(
    const std::map<CompetitorId, Rating>& ratings) {
  std::vector<CompetitorId> order;
  order.reserve(ratings.size());
  for (const auto& [id, rating] : ratings) order.push_back(id);
  // `ratings` iterates in ascending id order, so a stable sort on theta alone
  // breaks ties lexicographically.
  std::stable_sort(order.begin(), order.end(),
                   [&ratings](const CompetitorId& a, const CompetitorId& b) {
                     return ratings.at(a).theta > ratings.at(b).theta;
                   });
  return order;
}

RankingResult MakeRankingResult(Algorithm algorithm,
                                std::map<CompetitorId, Rating> ratings) {
  RankingResult result;
  result.algorithm = algorithm;
  result.order = OrderByTheta(ratings);
  result.ratings = std::move(ratings);
  return result;
}

RankingResult WinRateRanking(const Dataset& dataset) {
  std::map<CompetitorId, Rating> ratings;
  std::vector<CompetitorId> unrated;
  for (std::size_t i = 0; i < dataset.num_competitors(); ++i) {
    const CompetitorTotals& totals = dataset.Totals(i);
    double theta = 0.0;
    if (totals.matches() == 0) {
      unrated.push_back(dataset.roster()[i]);
    } else {
      theta = totals.half_credit_wins() / static_cast<double>(totals.matches());
    }
    ratings.emplace(dataset.roster()[i], Rating{theta, std::nullopt});
  }
  RankingResult result =
      MakeRankingResult(Algorithm::kWinRate, std::move(ratings));
  result.unrated = std::move(unrated);
  return result;
}

}  // namespace pairrank
