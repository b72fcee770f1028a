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

#include "pairrank/metrics.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "pairrank/bradley_terry.h"
#include "pairrank/elo.h"
#include "pairrank/errors.h"
#include "pairrank/glicko.h"
#include "pairrank/markov.h"
#include "test_util.h"

namespace pairrank {
namespace {

using testing::MakeDataset;
using Rows = std::vector<std::tuple<std::string, std::string, Outcome>>;

RankingResult FromThetas(Algorithm algorithm,
                         const std::map<CompetitorId, double>& thetas) {
  std::map<CompetitorId, Rating> ratings;
  for (const auto& [id, theta] : thetas) ratings[id] = Rating{theta, std::nullopt};
  return MakeRankingResult(algorithm, std::move(ratings));
}

Dataset RockPaperScissors() {
  return MakeDataset({{"A", "B", Outcome::kFirstWins},
                      {"B", "C", Outcome::kFirstWins},
                      {"C", "A", Outcome::kFirstWins}});
}

TEST(TriplesTest, ChainAndCycle) {
  const Dataset chain = MakeDataset({{"A", "B", Outcome::kFirstWins},
                                     {"B", "C", Outcome::kFirstWins}});
  EXPECT_EQ(EnumerateTriples(chain), (std::vector<Triple>{{"A", "B", "C"}}));
  EXPECT_EQ(EnumerateTriples(RockPaperScissors()),
            (std::vector<Triple>{{"A", "B", "C"}, {"B", "C", "A"}, {"C", "A", "B"}}));
}

TEST(TriplesTest, StrictMajorityIgnoresTies) {
  const Dataset d = MakeDataset({{"A", "B", Outcome::kFirstWins},
                                 {"B", "A", Outcome::kFirstWins},
                                 {"A", "B", Outcome::kTie},
                                 {"B", "C", Outcome::kFirstWins},
                                 {"B", "C", Outcome::kTie},
                                 {"C", "B", Outcome::kTie}});
  EXPECT_TRUE(EnumerateTriples(d).empty());
  EXPECT_FALSE(TransitivityScore(d, WinRateRanking(d)).has_value());
}

TEST(TriplesTest, MatchesBruteForceRecount) {
  const Dataset d = testing::RandomDataset(7, 60, 41, 0.2);
  // Recount majorities straight from the match list.
  std::map<std::pair<std::string, std::string>, int> net;
  for (const MatchRecord& m : d.matches()) {
    if (m.outcome == Outcome::kTie) continue;
    const bool first = m.outcome == Outcome::kFirstWins;
    net[{m.first, m.second}] += first ? 1 : -1;
    net[{m.second, m.first}] += first ? -1 : 1;
  }
  auto beats = [&](const std::string& a, const std::string& b) {
    auto it = net.find({a, b});
    return it != net.end() && it->second > 0;
  };
  std::vector<Triple> expected;
  for (const auto& i : d.roster()) {
    for (const auto& j : d.roster()) {
      for (const auto& k : d.roster()) {
        if (i == j || j == k || i == k) continue;
        if (beats(i, j) && beats(j, k)) expected.push_back({i, j, k});
      }
    }
  }
  EXPECT_EQ(EnumerateTriples(d), expected);
}

TEST(TransitivityTest, CycleScoresAtMostOneThird) {
  const Dataset d = RockPaperScissors();
  std::vector<std::string> ids = {"A", "B", "C"};
  int one_third = 0;
  do {
    const RankingResult r = FromThetas(
        Algorithm::kWinRate, {{ids[0], 3.0}, {ids[1], 2.0}, {ids[2], 1.0}});
    const double score = *TransitivityScore(d, r);
    EXPECT_LE(score, 1.0 / 3);
    // Only rotations of the cycle keep one of its three triples.
    if (score > 0) ++one_third;
  } while (std::next_permutation(ids.begin(), ids.end()));
  EXPECT_EQ(one_third, 3);
}

TEST(TransitivityTest, ConsistentOrderScoresOne) {
  const Dataset d = MakeDataset({{"A", "B", Outcome::kFirstWins},
                                 {"B", "C", Outcome::kFirstWins},
                                 {"A", "C", Outcome::kFirstWins},
                                 {"C", "D", Outcome::kFirstWins}});
  const RankingResult good =
      FromThetas(Algorithm::kElo, {{"A", 4}, {"B", 3}, {"C", 2}, {"D", 1}});
  EXPECT_EQ(*TransitivityScore(d, good), 1.0);
  const RankingResult flipped =
      FromThetas(Algorithm::kElo, {{"A", 4}, {"B", 2}, {"C", 3}, {"D", 1}});
  // Triples are ABC, ACD and BCD; swapping B and C breaks two of them.
  EXPECT_NEAR(*TransitivityScore(d, flipped), 1.0 / 3, 1e-15);
}

TEST(TransitivityTest, MissingCompetitorThrows) {
  const RankingResult r = FromThetas(Algorithm::kElo, {{"A", 1}, {"B", 0}});
  EXPECT_THROW(TransitivityScore(RockPaperScissors(), r), ValidationError);
}

TEST(ProbabilityTest, PerAlgorithmRules) {
  const RankingResult elo = FromThetas(Algorithm::kElo, {{"A", 1400}, {"B", 1000}});
  EXPECT_NEAR(ProbabilityFromResult(elo, "A", "B"), 10.0 / 11, 1e-15);
  const RankingResult bt =
      FromThetas(Algorithm::kBradleyTerry, {{"A", std::log(3.0)}, {"B", 0}});
  EXPECT_NEAR(ProbabilityFromResult(bt, "A", "B"), 0.75, 1e-15);
  const RankingResult markov = FromThetas(Algorithm::kMarkov, {{"A", 0.6}, {"B", 0.2}});
  EXPECT_NEAR(ProbabilityFromResult(markov, "A", "B"), 0.75, 1e-15);
  const RankingResult empty = FromThetas(Algorithm::kWinRate, {{"A", 0}, {"B", 0}});
  EXPECT_EQ(ProbabilityFromResult(empty, "A", "B"), 0.5);

  std::map<CompetitorId, Rating> ratings = {{"A", {1500, 300.0}},
                                            {"B", {1700, 400.0}}};
  const RankingResult glicko = MakeRankingResult(Algorithm::kGlicko, ratings);
  const double g = GlickoG(500.0);
  EXPECT_NEAR(ProbabilityFromResult(glicko, "A", "B"),
              1.0 / (1.0 + std::pow(10.0, g * 200.0 / 400.0)), 1e-12);
}

TEST(ProbabilityTest, ExactComplement) {
  const Dataset d = testing::RandomDataset(6, 400, 44, 0.1);
  std::vector<RankingResult> results = {EloRank(d, EloConfig{}),
                                        BtFit(d, BtConfig{}),
                                        GlickoRank(d, GlickoConfig{}),
                                        MarkovRank(d, MarkovConfig{}),
                                        WinRateRanking(d)};
  for (const RankingResult& r : results) {
    for (const auto& i : d.roster()) {
      for (const auto& j : d.roster()) {
        if (i == j) continue;
        const double p = ProbabilityFromResult(r, i, j);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
        EXPECT_EQ(p + ProbabilityFromResult(r, j, i), 1.0);
      }
    }
  }
}

TEST(ScorePredictionTest, EdgeCases) {
  PairPrediction none;
  ScorePrediction(none);
  EXPECT_EQ(none.f1, 1.0);

  PairPrediction missed;
  missed.expected = 2;
  missed.actual = 0;
  ScorePrediction(missed);
  EXPECT_EQ(missed.precision, 0.0);
  EXPECT_EQ(missed.recall, 0.0);
  EXPECT_EQ(missed.f1, 0.0);

  PairPrediction partial;
  partial.expected = 3;
  partial.actual = 2;
  ScorePrediction(partial);
  EXPECT_NEAR(partial.precision, 2.0 / 3, 1e-15);
  EXPECT_EQ(partial.recall, 1.0);
  EXPECT_NEAR(partial.f1, 0.8, 1e-15);
}

TEST(PredictF1Test, HandSteppedThreeCompetitors) {
  Rows rows;
  testing::Repeat(rows, "A", "B", 3);
  testing::Repeat(rows, "B", "A", 1);
  testing::Repeat(rows, "A", "C", 2);
  testing::Repeat(rows, "C", "A", 2);
  testing::Repeat(rows, "A", "C", 1, Outcome::kTie);
  testing::Repeat(rows, "B", "C", 2);
  const Dataset test = MakeDataset(rows);
  // Ratio model: p(A, B) = p(A, C) = 3/4, p(B, C) = 1/2.
  const RankingResult r =
      FromThetas(Algorithm::kWinRate, {{"A", 3}, {"B", 1}, {"C", 1}});
  const F1Report report = PredictF1(test, test, r);
  ASSERT_EQ(report.pairs.size(), 6u);
  // A-B: E=3, A=3 and E=1, A=1.   A-C: E=3, A=2 (f1 0.8) and E=1, A=2 (2/3).
  // B-C: E=1, A=2 (2/3) and E=1, A=0 (0).
  EXPECT_NEAR(report.per_competitor.at("A").f1, 0.9, 1e-12);
  EXPECT_NEAR(report.per_competitor.at("B").f1, 5.0 / 6, 1e-12);
  EXPECT_NEAR(report.per_competitor.at("C").f1, 1.0 / 3, 1e-12);
  EXPECT_NEAR(report.overall_f1, (1 + 1 + 0.8 + 2.0 / 3 + 2.0 / 3 + 0) / 6, 1e-12);
  EXPECT_EQ(report.per_competitor.at("A").pairs, 2u);
  EXPECT_EQ(report.excluded_pairs, 0u);
}

TEST(PredictF1Test, PerfectPredictionScoresOne) {
  Rows rows;
  testing::Repeat(rows, "A", "B", 3);
  testing::Repeat(rows, "B", "A", 1);
  const Dataset test = MakeDataset(rows);
  const RankingResult r = FromThetas(Algorithm::kMarkov, {{"A", 0.75}, {"B", 0.25}});
  EXPECT_EQ(PredictF1(test, test, r).overall_f1, 1.0);
}

TEST(PredictF1Test, EmptyTestSetThrows) {
  const Dataset train = RockPaperScissors();
  const std::vector<CompetitorId> roster = train.roster();
  const Dataset empty = Dataset::FromMatches({}, roster);
  EXPECT_THROW(PredictF1(train, empty, WinRateRanking(train)), ValidationError);
}

TEST(SpearmanTest, IdenticalAndReversed) {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  const std::vector<double> y = {5, 4, 3, 2, 1};
  EXPECT_EQ(SpearmanCorrelation(x, x), 1.0);
  EXPECT_EQ(SpearmanCorrelation(x, y), -1.0);
}

TEST(SpearmanTest, SquaredRankDifferenceFormula) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 10;
    std::vector<double> x(n), y(n);
    std::vector<int> rank_y(n);
    for (int i = 0; i < n; ++i) x[i] = i;
    std::iota(rank_y.begin(), rank_y.end(), 0);
    std::shuffle(rank_y.begin(), rank_y.end(), rng);
    double d2 = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] = std::exp(0.1 * rank_y[i]);
      d2 += (i - rank_y[i]) * (i - rank_y[i]);
    }
    EXPECT_NEAR(SpearmanCorrelation(x, y), 1.0 - 6.0 * d2 / (n * (n * n - 1.0)),
                1e-12);
  }
}

TEST(SpearmanTest, AverageRanksForTies) {
  // Ranks of x: 1, 2.5, 2.5, 4. Pearson on ranks against 1..4.
  const std::vector<double> x = {10, 20, 20, 30};
  const std::vector<double> y = {1, 2, 3, 4};
  EXPECT_NEAR(SpearmanCorrelation(x, y), std::sqrt(0.9), 1e-12);
}

TEST(SpearmanTest, ConstantInputs) {
  const std::vector<double> flat = {2, 2, 2};
  const std::vector<double> x = {1, 2, 3};
  EXPECT_EQ(SpearmanCorrelation(flat, flat), 1.0);
  EXPECT_EQ(SpearmanCorrelation(flat, x), 0.0);
}

TEST(SpearmanTest, InvariantUnderMonotoneTransform) {
  const Dataset d = testing::RandomDataset(8, 500, 50);
  const RankingResult bt = BtFit(d, BtConfig{});
  std::map<CompetitorId, double> stretched;
  for (const auto& [id, rating] : bt.ratings) stretched[id] = std::exp(3 * rating.theta);
  EXPECT_NEAR(Spearman(bt, FromThetas(Algorithm::kMarkov, stretched)), 1.0, 1e-12);
}

TEST(SpearmanTest, RosterMismatchThrows) {
  const RankingResult a = FromThetas(Algorithm::kElo, {{"A", 1}, {"B", 0}});
  const RankingResult b = FromThetas(Algorithm::kElo, {{"A", 1}, {"C", 0}});
  EXPECT_THROW(Spearman(a, b), ValidationError);
}

}  // namespace
}  // namespace pairrank
