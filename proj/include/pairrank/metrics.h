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

// Evaluation criteria over ranking results: transitivity preservation,
// prediction F1 on held-out matches, and rank correlation.

#ifndef PAIRRANK_METRICS_H_
#define PAIRRANK_METRICS_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pairrank/core.h"

namespace pairrank {

// i beats j and j beats k by strict majority of decisive results.
struct Triple {
  CompetitorId i;
  CompetitorId j;
  CompetitorId k;

  bool operator==(const Triple&) const = default;
};

// All ordered (i, j, k), distinct, with w_ij > l_ij and w_jk > l_jk. Ties in
// the tally count for neither side. Sorted by (i, j, k).
std::vector<Triple> EnumerateTriples(const Dataset& dataset);

// Fraction of triples ranked i above j above k. nullopt when the dataset has
// no triples. Throws ValidationError if `result` misses a competitor.
std::optional<double> TransitivityScore(const Dataset& dataset,
                                        const RankingResult& result);

// Probability that i beats j under the result's own model:
//   Elo           400-point logistic on theta
//   Glicko        the same, attenuated by g(sqrt(sigma_i^2 + sigma_j^2))
//   Bradley-Terry logistic on the logit difference
//   Markov        pi_i / (pi_i + pi_j)
//   WinRate       theta_i / (theta_i + theta_j)
// The ratio rules return 0.5 for 0/0. p(i, j) + p(j, i) == 1 exactly.
double ProbabilityFromResult(const RankingResult& result, std::string_view i,
                             std::string_view j);

// One side of a test pair.
struct PairPrediction {
  CompetitorId competitor;
  CompetitorId opponent;
  std::int64_t matches = 0;
  double probability = 0.5;
  std::int64_t expected = 0;  // floor(matches * probability)
  std::int64_t actual = 0;    // floor(wins + 0.5 ties)
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct CompetitorF1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t pairs = 0;
};

struct F1Report {
  std::map<CompetitorId, CompetitorF1> per_competitor;
  double overall_f1 = 0.0;
  std::vector<PairPrediction> pairs;
  // Test pairs skipped because a member is missing from the ranking.
  std::size_t excluded_pairs = 0;
};

// Scores precision/recall/F1 of expected against actual win counts for one
// side of a pair: overlap = min(E, A), precision = overlap / E,
// recall = overlap / A. E = A = 0 scores 1; a single zero denominator makes
// that ratio 0.
void ScorePrediction(PairPrediction& prediction);

// Every pair with test matches is scored from both sides. Per-competitor
// values average that competitor's sides; overall_f1 averages all sides.
// `train` is accepted for symmetry with the fitting step and is not read.
// Throws ValidationError when the test set is empty.
F1Report PredictF1(const Dataset& train, const Dataset& test,
                   const RankingResult& result);

// Spearman rank correlation with average ranks for tied values.
double SpearmanCorrelation(std::span<const double> x, std::span<const double> y);

// Correlation of the two results' theta over a shared roster. Throws
// ValidationError if the rosters differ.
double Spearman(const RankingResult& a, const RankingResult& b);

}  // namespace pairrank

#endif  // PAIRRANK_METRICS_H_
