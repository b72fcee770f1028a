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

// Experiment drivers: hyperparameter sweeps, Elo permutation stability, and
// side-by-side comparison of rating systems on one shared split.

#ifndef PAIRRANK_EXPERIMENTS_H_
#define PAIRRANK_EXPERIMENTS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pairrank/bradley_terry.h"
#include "pairrank/core.h"
#include "pairrank/elo.h"
#include "pairrank/glicko.h"
#include "pairrank/markov.h"
#include "pairrank/metrics.h"

namespace pairrank {

inline constexpr double kDefaultTrainFraction = 0.75;

struct AlgorithmSettings {
  EloConfig elo;
  BtConfig bt;
  GlickoConfig glicko;
  MarkovConfig markov;
};

RankingResult Fit(Algorithm algorithm, const Dataset& dataset,
                  const AlgorithmSettings& settings);

// Tunable parameters, addressed by name: "k" (Elo), "p" (Markov) and
// "initial-rd" (Glicko).
enum class SweepParameter { kEloK, kMarkovP, kGlickoInitialRd };

std::optional<SweepParameter> ParseSweepParameter(std::string_view name);
std::string_view SweepParameterName(SweepParameter parameter);
Algorithm SweepAlgorithm(SweepParameter parameter);

// Default 100-point grids: k in [1, 100], p in [0.51, 0.99] and
// initial-rd in [30, 350].
std::vector<double> DefaultSweepGrid(SweepParameter parameter);

// `count` evenly spaced values from `min` to `max` inclusive.
std::vector<double> LinearGrid(double min, double max, int count);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::kEloK;
  std::vector<double> values;
  int repeats = 1;
  std::uint64_t split_seed = 0;
  double train_fraction = kDefaultTrainFraction;
  // Settings for everything the sweep does not vary.
  AlgorithmSettings base;
};

// Throws ValidationError for an empty grid, repeats < 1, or a value outside
// the parameter's domain.
void Validate(const SweepSpec& spec);

struct SweepPoint {
  std::size_t index = 0;
  double value = 0.0;
  int repeat = 0;
  std::optional<double> overall_f1;
  std::map<CompetitorId, double> per_competitor_f1;
  // Set when the fit failed; the sweep carries on.
  std::string error;
};

struct SweepReport {
  Algorithm algorithm = Algorithm::kElo;
  SweepParameter parameter = SweepParameter::kEloK;
  std::size_t train_matches = 0;
  std::size_t test_matches = 0;
  // Ordered by value index, then repeat.
  std::vector<SweepPoint> points;
  // Population standard deviation of overall F1 across successful points.
  double dispersion = 0.0;
  double mean_f1 = 0.0;
};

// One split for the whole sweep; every point fits on train and is scored
// with PredictF1 on test. Repeat r runs with algorithm seed base + r.
SweepReport RunSweep(const Dataset& dataset, const SweepSpec& spec);

struct PermutationCell {
  double k = 0.0;
  int permutations = 0;
  RankingResult result;
};

struct PermutationReport {
  std::vector<double> k_values;
  std::vector<int> permutation_counts;
  // k-major: cells[a * counts + b] is (k_values[a], permutation_counts[b]).
  std::vector<PermutationCell> cells;
  // unstable[a][id]: id's rank differs between two cells sharing k_values[a].
  std::vector<std::map<CompetitorId, bool>> unstable;

  const PermutationCell& Cell(std::size_t k_index, std::size_t count_index) const {
    return cells[k_index * permutation_counts.size() + count_index];
  }
};

// Elo over every (k, P) cell; all cells share `seed`.
PermutationReport RunPermutationStudy(const Dataset& dataset,
                                      std::span<const double> k_values,
                                      std::span<const int> permutation_counts,
                                      std::uint64_t seed,
                                      double initial_rating = 1000.0);

struct AlgorithmEvaluation {
  Algorithm algorithm = Algorithm::kElo;
  // Fit on the full dataset; feeds transitivity and correlations.
  std::optional<RankingResult> full_fit;
  // Fit on the train half; feeds F1.
  std::optional<RankingResult> train_fit;
  std::optional<double> transitivity;
  std::optional<F1Report> f1;
  std::string error;

  bool ok() const { return error.empty(); }
};

struct ComparisonReport {
  std::vector<AlgorithmEvaluation> rows;
  std::size_t triples = 0;
  std::size_t train_matches = 0;
  std::size_t test_matches = 0;
  std::uint64_t split_seed = 0;
  // spearman[a][b] between rows a and b; nullopt when either fit failed.
  std::vector<std::vector<std::optional<double>>> spearman;
};

// Fits `algorithm` on the full dataset (transitivity) and on the train half
// of the split (F1). Failures are captured in `error`.
AlgorithmEvaluation EvaluateAlgorithm(const Dataset& dataset, const Dataset& train,
                                      const Dataset& test, Algorithm algorithm,
                                      const AlgorithmSettings& settings);

// Evaluates each requested algorithm plus the win-rate baseline (appended
// unless already requested) on one shared split. Throws ValidationError for
// an empty list.
ComparisonReport CompareAlgorithms(const Dataset& dataset,
                                   std::span<const Algorithm> algorithms,
                                   std::uint64_t split_seed,
                                   const AlgorithmSettings& settings,
                                   double train_fraction = kDefaultTrainFraction);

}  // namespace pairrank

#endif  // PAIRRANK_EXPERIMENTS_H_
