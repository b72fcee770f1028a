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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "pairrank/errors.h"

namespace pairrank {
namespace {

TEST(SimulatorTest, DefaultLogitsAndNames) {
  SimConfig config;
  config.n_competitors = 5;
  config.n_matches = 10;
  const SimulatedDataset sim = Generate(config);
  ASSERT_EQ(sim.ground_truth.size(), 5u);
  EXPECT_EQ(sim.ground_truth.at("c00"), -2.0);
  EXPECT_EQ(sim.ground_truth.at("c02"), 0.0);
  EXPECT_EQ(sim.ground_truth.at("c04"), 2.0);
  EXPECT_EQ(sim.dataset.num_competitors(), 5u);
  EXPECT_EQ(sim.dataset.num_matches(), 10u);

  config.n_competitors = 12;
  EXPECT_TRUE(Generate(config).ground_truth.contains("c11"));
}

TEST(SimulatorTest, WinFrequencyFollowsBradleyTerry) {
  SimConfig config;
  config.n_competitors = 2;
  config.true_logits = std::vector<double>{std::log(3.0), 0.0};
  config.n_matches = 40000;
  config.seed = 5;
  const SimulatedDataset sim = Generate(config);
  const PairTally tally = sim.dataset.Tally(0, 1);
  const double rate = static_cast<double>(tally.wins) / tally.matches();
  // Binomial standard error is about 0.0022; allow five of them.
  EXPECT_NEAR(rate, 0.75, 0.011);
}

TEST(SimulatorTest, ControlledPairsAreUniform) {
  SimConfig config;
  config.n_competitors = 6;
  config.n_matches = 30000;
  config.seed = 9;
  const Dataset d = Generate(config).dataset;
  const double expected = 30000.0 / 15;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      const double count = static_cast<double>(d.Tally(i, j).matches());
      EXPECT_NEAR(count, expected, 5 * std::sqrt(expected));
    }
  }
}

double MatchCountVariation(const Dataset& d) {
  std::vector<double> counts;
  for (std::size_t i = 0; i < d.num_competitors(); ++i) {
    counts.push_back(static_cast<double>(d.Totals(i).matches()));
  }
  double mean = 0.0;
  for (double c : counts) mean += c / counts.size();
  double var = 0.0;
  for (double c : counts) var += (c - mean) * (c - mean) / counts.size();
  return std::sqrt(var) / mean;
}

TEST(SimulatorTest, ArenaStyleIsSkewed) {
  SimConfig config;
  config.n_competitors = 20;
  config.n_matches = 20000;
  config.seed = 3;
  const double controlled = MatchCountVariation(Generate(config).dataset);
  config.style = MatchupStyle::kArena;
  const double arena = MatchCountVariation(Generate(config).dataset);
  EXPECT_LT(controlled, 0.05);
  EXPECT_GT(arena, 0.5);
  config.skew_alpha = 2.0;
  EXPECT_GT(MatchCountVariation(Generate(config).dataset), arena);
}

TEST(SimulatorTest, TiesOnlyWhenRequested) {
  SimConfig config;
  config.n_matches = 5000;
  auto ties = [](const Dataset& d) {
    return std::count_if(d.matches().begin(), d.matches().end(),
                         [](const MatchRecord& m) { return m.outcome == Outcome::kTie; });
  };
  EXPECT_EQ(ties(Generate(config).dataset), 0);
  config.tie_rate = 0.2;
  EXPECT_NEAR(ties(Generate(config).dataset) / 5000.0, 0.2, 0.03);
}

TEST(SimulatorTest, DeterministicForSeed) {
  SimConfig config;
  config.style = MatchupStyle::kArena;
  config.n_matches = 2000;
  config.seed = 42;
  EXPECT_EQ(Generate(config).dataset, Generate(config).dataset);
  SimConfig other = config;
  other.seed = 43;
  EXPECT_FALSE(Generate(config).dataset == Generate(other).dataset);
}

TEST(SimulatorTest, Validation) {
  SimConfig config;
  config.n_competitors = 1;
  EXPECT_THROW(Generate(config), ValidationError);
  config = SimConfig{};
  config.true_logits = std::vector<double>{0.0, 1.0};
  EXPECT_THROW(Generate(config), ValidationError);
  config = SimConfig{};
  config.tie_rate = 1.5;
  EXPECT_THROW(Generate(config), ValidationError);
  config = SimConfig{};
  config.n_matches = -1;
  EXPECT_THROW(Generate(config), ValidationError);
  config = SimConfig{};
  config.skew_alpha = -0.5;
  EXPECT_THROW(Generate(config), ValidationError);
}

TEST(SimulatorTest, StyleNames) {
  EXPECT_EQ(ParseMatchupStyle("arena"), MatchupStyle::kArena);
  EXPECT_EQ(ParseMatchupStyle("controlled"), MatchupStyle::kControlled);
  EXPECT_FALSE(ParseMatchupStyle("slam").has_value());
  EXPECT_EQ(MatchupStyleName(MatchupStyle::kArena), "arena");
}

TEST(SimulatorTest, GroundTruthOutputs) {
  const std::map<CompetitorId, double> truth = {{"c00", -1.0}, {"c01", 0.25}};
  std::ostringstream out;
  WriteGroundTruth(out, truth);
  EXPECT_EQ(out.str(), "competitor,logit\nc00,-1.000000\nc01,0.250000\n");
  const RankingResult r = GroundTruthRanking(truth);
  EXPECT_EQ(r.order, (std::vector<CompetitorId>{"c01", "c00"}));
}

}  // namespace
}  // namespace pairrank
