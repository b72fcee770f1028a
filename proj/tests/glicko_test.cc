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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "pairrank/elo.h"
#include "pairrank/errors.h"
#include "test_util.h"

namespace pairrank {
namespace {

using testing::MakeDataset;

TEST(GlickoGTest, KnownValues) {
  EXPECT_EQ(GlickoG(0.0), 1.0);
  EXPECT_NEAR(GlickoG(350.0), 0.669069397181984581511543585863, 1e-12);
  EXPECT_NEAR(kGlickoQ, std::numbers::ln10 / 400.0, 1e-18);
}

TEST(GlickoGTest, DecreasesTowardZero) {
  double previous = 1.0;
  for (double sigma = 10; sigma <= 1e5; sigma *= 2) {
    const double g = GlickoG(sigma);
    EXPECT_LT(g, previous);
    EXPECT_GT(g, 0.0);
    previous = g;
  }
}

TEST(GlickoExpectedTest, ReducesToEloWithoutDeviation) {
  EXPECT_NEAR(GlickoExpected(1400, 1000, 0.0), EloExpected(1400, 1000), 1e-15);
  // Uncertainty about the opponent pulls the expectation toward 1/2.
  EXPECT_LT(GlickoExpected(1400, 1000, 300.0), EloExpected(1400, 1000));
  EXPECT_GT(GlickoExpected(1400, 1000, 300.0), 0.5);
}

TEST(GlickoUpdateTest, FrozenOracle) {
  const std::vector<GlickoOpponent> opponents = {{{1700, 30.0}, 1.0}};
  const Rating updated = GlickoUpdate({1500, 200.0}, opponents, 0.0);
  EXPECT_NEAR(updated.theta, 1640.22226297699135928411663103, 1e-9);
  EXPECT_NEAR(*updated.sigma, 179.575424317606153640789944748, 1e-9);
}

TEST(GlickoUpdateTest, DeviationShrinksAndRespectsFloor) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> rating(1000, 2000);
  std::uniform_real_distribution<double> deviation(30, 350);
  for (int i = 0; i < 500; ++i) {
    const Rating self{rating(rng), deviation(rng)};
    const std::vector<GlickoOpponent> opponents = {
        {{rating(rng), deviation(rng)}, static_cast<double>(i % 3) / 2}};
    const Rating updated = GlickoUpdate(self, opponents, 30.0);
    EXPECT_LE(*updated.sigma, *self.sigma);
    EXPECT_GE(*updated.sigma, std::min(30.0, *self.sigma));
    // A win never lowers the rating and a loss never raises it.
    if (opponents[0].score == 1.0) EXPECT_GE(updated.theta, self.theta);
    if (opponents[0].score == 0.0) EXPECT_LE(updated.theta, self.theta);
  }
  const std::vector<GlickoOpponent> many(200, {{1500, 50.0}, 0.5});
  EXPECT_EQ(*GlickoUpdate({1500, 100.0}, many, 80.0).sigma, 80.0);
}

TEST(GlickoUpdateTest, ZeroDeviationIsFrozen) {
  const std::vector<GlickoOpponent> opponents = {{{1700, 100.0}, 1.0}};
  const Rating updated = GlickoUpdate({1500, 0.0}, opponents, 30.0);
  EXPECT_EQ(updated.theta, 1500);
  EXPECT_EQ(*updated.sigma, 0.0);
}

TEST(GlickoUpdateTest, SmallDeviationMatchesEloStep) {
  // With a certain opponent and tiny sigma the step is Elo with k = q sigma^2.
  const double sigma = 1e-2;
  const std::vector<GlickoOpponent> opponents = {{{1600, 0.0}, 1.0}};
  const Rating updated = GlickoUpdate({1500, sigma}, opponents, 0.0);
  const double k = kGlickoQ * sigma * sigma;
  const double elo = EloUpdate(1500, 1600, 1.0, k);
  EXPECT_NEAR((updated.theta - 1500) / (elo - 1500), 1.0, 1e-6);
}

TEST(GlickoUpdateTest, RejectsEmptyOpponents) {
  EXPECT_THROW(GlickoUpdate({1500, 350.0}, {}, 30.0), std::exception);
}

TEST(GlickoRankTest, SingleMatch) {
  const RankingResult r = GlickoRank(
      MakeDataset({{"A", "B", Outcome::kFirstWins}}), GlickoConfig{});
  EXPECT_NEAR(r.RatingOf("A").theta, 1662.21200260576478434, 1e-9);
  EXPECT_NEAR(r.RatingOf("B").theta, 1337.78799739423521566, 1e-9);
  EXPECT_NEAR(*r.RatingOf("A").sigma, 290.230506091091190721, 1e-9);
  EXPECT_EQ(r.order, (std::vector<CompetitorId>{"A", "B"}));
}

TEST(GlickoRankTest, UsesPreMatchRatingsOfBothPlayers) {
  const RankingResult r = GlickoRank(MakeDataset({{"A", "B", Outcome::kFirstWins},
                                                  {"A", "C", Outcome::kTie}}),
                                     GlickoConfig{});
  EXPECT_NEAR(r.RatingOf("A").theta, 1623.97700584286018283, 1e-9);
  EXPECT_NEAR(*r.RatingOf("A").sigma, 256.152556280835867259, 1e-9);
  EXPECT_NEAR(r.RatingOf("C").theta, 1557.56292486957862342, 1e-9);
  EXPECT_NEAR(*r.RatingOf("C").sigma, 286.823613901135838670, 1e-9);
  EXPECT_EQ(r.order, (std::vector<CompetitorId>{"A", "C", "B"}));
}

TEST(GlickoRankTest, UnplayedCompetitorKeepsPrior) {
  const std::vector<CompetitorId> extra = {"Z"};
  const Dataset d = Dataset::FromMatches(
      {{"A", "B", Outcome::kFirstWins, 0}}, extra);
  GlickoConfig config;
  config.initial_rating = 1200;
  config.initial_rd = 200;
  const RankingResult r = GlickoRank(d, config);
  EXPECT_EQ(r.RatingOf("Z").theta, 1200);
  EXPECT_EQ(*r.RatingOf("Z").sigma, 200);
}

TEST(GlickoRankTest, DeviationsNeverGrowOverLongRun) {
  const Dataset d = testing::RandomDataset(6, 2000, 4);
  GlickoConfig config;
  const RankingResult r = GlickoRank(d, config);
  for (const auto& [id, rating] : r.ratings) {
    EXPECT_GE(*rating.sigma, config.min_rd);
    EXPECT_LE(*rating.sigma, config.initial_rd);
  }
}

TEST(GlickoConfigTest, Validation) {
  const Dataset d = MakeDataset({{"A", "B", Outcome::kFirstWins}});
  GlickoConfig config;
  config.initial_rd = 0;
  EXPECT_THROW(GlickoRank(d, config), ValidationError);
  config.initial_rd = 100;
  config.min_rd = 150;
  EXPECT_THROW(GlickoRank(d, config), ValidationError);
  config.min_rd = -1;
  EXPECT_THROW(GlickoRank(d, config), ValidationError);
}

}  // namespace
}  // namespace pairrank
