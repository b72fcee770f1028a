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

// Shared domain types: match records, datasets with pairwise tallies, and
// ranking results produced by every rating system.

#ifndef PAIRRANK_CORE_H_
#define PAIRRANK_CORE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pairrank {

using CompetitorId = std::string;

enum class Outcome { kFirstWins, kSecondWins, kTie };

// Score of the first competitor: 1 for a win, 0 for a loss, 0.5 for a tie.
double FirstScore(Outcome outcome);

std::string_view OutcomeToken(Outcome outcome);
std::optional<Outcome> ParseOutcomeToken(std::string_view token);

struct MatchRecord {
  CompetitorId first;
  CompetitorId second;
  Outcome outcome = Outcome::kTie;
  std::uint64_t sequence = 0;

  bool operator==(const MatchRecord&) const = default;
};

// Results of competitor i against competitor j, from i's side.
struct PairTally {
  std::int64_t wins = 0;
  std::int64_t losses = 0;
  std::int64_t ties = 0;

  std::int64_t matches() const { return wins + losses + ties; }
  // Wins with ties counted as half a win for both sides.
  double half_credit_wins() const { return wins + 0.5 * ties; }
  double half_credit_losses() const { return losses + 0.5 * ties; }
};

struct CompetitorTotals {
  std::int64_t wins = 0;
  std::int64_t losses = 0;
  std::int64_t ties = 0;

  std::int64_t matches() const { return wins + losses + ties; }
  double half_credit_wins() const { return wins + 0.5 * ties; }
  double half_credit_losses() const { return losses + 0.5 * ties; }
};

// An ordered match log together with its roster and the pairwise tallies
// derived from it. Immutable once built. The roster is kept sorted
// ascending, and competitor indices refer to positions in that order.
class Dataset {
 public:
  Dataset() = default;

  // Throws ValidationError on a self-match, an empty id, or a repeated
  // sequence number. `extra_roster` adds competitors without matches.
  static Dataset FromMatches(std::vector<MatchRecord> matches,
                             std::span<const CompetitorId> extra_roster = {});

  const std::vector<CompetitorId>& roster() const { return roster_; }
  const std::vector<MatchRecord>& matches() const { return matches_; }
  std::size_t num_competitors() const { return roster_.size(); }
  std::size_t num_matches() const { return matches_.size(); }

  std::optional<std::size_t> FindIndex(std::string_view id) const;
  // Throws ValidationError for an id outside the roster.
  std::size_t IndexOf(std::string_view id) const;

  const PairTally& Tally(std::size_t i, std::size_t j) const {
    return tallies_[i * roster_.size() + j];
  }
  const CompetitorTotals& Totals(std::size_t i) const { return totals_[i]; }

  bool operator==(const Dataset& other) const {
    return roster_ == other.roster_ && matches_ == other.matches_;
  }

 private:
  std::vector<CompetitorId> roster_;
  std::map<CompetitorId, std::size_t, std::less<>> index_;
  std::vector<MatchRecord> matches_;
  std::vector<PairTally> tallies_;
  std::vector<CompetitorTotals> totals_;
};

// Uniformly random match-level partition. The train half receives
// round(train_fraction * |matches|) matches; both halves keep the original
// relative match order and the full roster. Throws ValidationError when the
// fraction is outside (0, 1) or the dataset has fewer than two matches.
std::pair<Dataset, Dataset> SplitDataset(const Dataset& dataset,
                                         double train_fraction,
                                         std::uint64_t seed);

enum class Algorithm { kElo, kBradleyTerry, kGlicko, kMarkov, kWinRate };

std::string_view AlgorithmName(Algorithm algorithm);
// Accepts the canonical names plus the short aliases "bt" and "win-rate".
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct Rating {
  double theta = 0.0;
  std::optional<double> sigma;
};

struct RankingResult {
  Algorithm algorithm = Algorithm::kWinRate;
  std::map<CompetitorId, Rating> ratings;
  // Descending theta; equal theta broken by ascending id.
  std::vector<CompetitorId> order;
  std::map<std::string, double> hyperparameters;
  std::optional<std::int64_t> seed;

  // Competitors with no matches in the fitting data.
  std::vector<CompetitorId> unrated;
  // Spread of theta across Elo permutation passes.
  std::map<CompetitorId, double> rating_std;
  // Solver diagnostics such as iterations and final gradient norm.
  std::map<std::string, double> diagnostics;

  // Throws ValidationError for an unknown competitor.
  const Rating& RatingOf(std::string_view id) const;
  // 0 is best.
  std::size_t RankOf(std::string_view id) const;
};

std::vector<CompetitorId> OrderByTheta(
    const std::map<CompetitorId, Rating>& ratings);

// Fills `order` from `ratings`.
RankingResult MakeRankingResult(Algorithm algorithm,
                                std::map<CompetitorId, Rating> ratings);

// theta_i = (W_i + 0.5 T_i) / N_i. Competitors without matches get 0 and
// are listed in `unrated`.
RankingResult WinRateRanking(const Dataset& dataset);

// Seed for an independent stream derived from a base seed and a stream index.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream);

}  // namespace pairrank

#endif  // PAIRRANK_CORE_H_
