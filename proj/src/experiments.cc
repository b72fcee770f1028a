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

#include "pairrank/experiments.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "pairrank/errors.h"

namespace pairrank {
namespace {

void CheckDomain(SweepParameter parameter, double value) {
  switch (parameter) {
    case SweepParameter::kEloK:
      if (!(value > 0.0)) throw ValidationError("sweep value for k must be > 0");
      return;
    case SweepParameter::kMarkovP:
      if (!(value > 0.5 && value < 1.0)) {
        throw ValidationError("sweep value for p must lie in (0.5, 1)");
      }
      return;
    case SweepParameter::kGlickoInitialRd:
      if (!(value > 0.0)) {
        throw ValidationError("sweep value for initial-rd must be > 0");
      }
      return;
  }
}

AlgorithmSettings WithValue(AlgorithmSettings settings, SweepParameter parameter,
                            double value) {
  switch (parameter) {
    case SweepParameter::kEloK:
      settings.elo.k = value;
      break;
    case SweepParameter::kMarkovP:
      settings.markov.p = value;
      break;
    case SweepParameter::kGlickoInitialRd:
      settings.glicko.initial_rd = value;
      break;
  }
  return settings;
}

}  // namespace

RankingResult Fit(Algorithm algorithm, const Dataset& dataset,
                  const AlgorithmSettings& settings) {
  switch (algorithm) {
    case Algorithm::kElo:
      return EloRank(dataset, settings.elo);
    case Algorithm::kBradleyTerry:
      return BtFit(dataset, settings.bt);
    case Algorithm::kGlicko:
      return GlickoRank(dataset, settings.glicko);
    case Algorithm::kMarkov:
      return MarkovRank(dataset, settings.markov);
    case Algorithm::kWinRate:
      return WinRateRanking(dataset);
  }
  return WinRateRanking(dataset);
}

std::optional<SweepParameter> ParseSweepParameter(std::string_view name) {
  if (name == "k") return SweepParameter::kEloK;
  if (name == "p") return SweepParameter::kMarkovP;
  if (name == "initial-rd") return SweepParameter::kGlickoInitialRd;
  return std::nullopt;
}

std::string_view SweepParameterName(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kEloK:
      return "k";
    case SweepParameter::kMarkovP:
      return "p";
    case SweepParameter::kGlickoInitialRd:
      return "initial-rd";
  }
  return "k";
}

Algorithm SweepAlgorithm(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kEloK:
      return Algorithm::kElo;
    case SweepParameter::kMarkovP:
      return Algorithm::kMarkov;
    case SweepParameter::kGlickoInitialRd:
      return Algorithm::kGlicko;
  }
  return Algorithm::kElo;
}

std::vector<double> LinearGrid(double min, double max, int count) {
  if (count < 1) throw ValidationError("grid count must be >= 1");
  if (count == 1) return {min};
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    grid[i] = min + (max - min) * i / (count - 1);
  }
  grid.back() = max;
  return grid;
}

std::vector<double> DefaultSweepGrid(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kEloK:
      return LinearGrid(1.0, 100.0, 100);
    case SweepParameter::kMarkovP:
      return LinearGrid(0.51, 0.99, 100);
    case SweepParameter::kGlickoInitialRd:
      return LinearGrid(30.0, 350.0, 100);
  }
  return {};
}

void Validate(const SweepSpec& spec) {
  if (spec.values.empty()) throw ValidationError("sweep grid is empty");
  if (spec.repeats < 1) throw ValidationError("sweep repeats must be >= 1");
  for (double value : spec.values) CheckDomain(spec.parameter, value);
}

SweepReport RunSweep(const Dataset& dataset, const SweepSpec& spec) {
  Validate(spec);
  const auto [train, test] =
      SplitDataset(dataset, spec.train_fraction, spec.split_seed);
  SweepReport report;
  report.parameter = spec.parameter;
  report.algorithm = SweepAlgorithm(spec.parameter);
  report.train_matches = train.num_matches();
  report.test_matches = test.num_matches();

  for (std::size_t index = 0; index < spec.values.size(); ++index) {
    for (int repeat = 0; repeat < spec.repeats; ++repeat) {
      SweepPoint point;
      point.index = index;
      point.value = spec.values[index];
      point.repeat = repeat;
      AlgorithmSettings settings =
          WithValue(spec.base, spec.parameter, point.value);
      settings.elo.seed = spec.base.elo.seed + repeat;
      try {
        const RankingResult fit = Fit(report.algorithm, train, settings);
        const F1Report f1 = PredictF1(train, test, fit);
        point.overall_f1 = f1.overall_f1;
        for (const auto& [id, entry] : f1.per_competitor) {
          point.per_competitor_f1.emplace(id, entry.f1);
        }
      } catch (const std::runtime_error& e) {
        point.error = e.what();
      }
      report.points.push_back(std::move(point));
    }
  }

  std::vector<double> scores;
  for (const SweepPoint& point : report.points) {
    if (point.overall_f1) scores.push_back(*point.overall_f1);
  }
  if (!scores.empty()) {
    double mean = 0.0;
    for (double s : scores) mean += s;
    mean /= scores.size();
    double variance = 0.0;
    for (double s : scores) variance += (s - mean) * (s - mean);
    report.mean_f1 = mean;
    report.dispersion = std::sqrt(variance / scores.size());
  }
  return report;
}

PermutationReport RunPermutationStudy(const Dataset& dataset,
                                      std::span<const double> k_values,
                                      std::span<const int> permutation_counts,
                                      std::uint64_t seed, double initial_rating) {
  if (k_values.empty() || permutation_counts.empty()) {
    throw ValidationError("permutation study needs k values and counts");
  }
  PermutationReport report;
  report.k_values.assign(k_values.begin(), k_values.end());
  report.permutation_counts.assign(permutation_counts.begin(),
                                   permutation_counts.end());
  for (double k : k_values) {
    for (int count : permutation_counts) {
      EloConfig config;
      config.k = k;
      config.permutations = count;
      config.seed = seed;
      config.initial_rating = initial_rating;
      report.cells.push_back({k, count, EloRank(dataset, config)});
    }
  }
  for (std::size_t a = 0; a < k_values.size(); ++a) {
    std::map<CompetitorId, bool> flags;
    for (const CompetitorId& id : dataset.roster()) {
      std::set<std::size_t> ranks;
      for (std::size_t b = 0; b < permutation_counts.size(); ++b) {
        ranks.insert(report.Cell(a, b).result.RankOf(id));
      }
      flags.emplace(id, ranks.size() > 1);
    }
    report.unstable.push_back(std::move(flags));
  }
  return report;
}

AlgorithmEvaluation EvaluateAlgorithm(const Dataset& dataset, const Dataset& train,
                                      const Dataset& test, Algorithm algorithm,
                                      const AlgorithmSettings& settings) {
  AlgorithmEvaluation row;
  row.algorithm = algorithm;
  try {
    row.full_fit = Fit(algorithm, dataset, settings);
    row.transitivity = TransitivityScore(dataset, *row.full_fit);
    row.train_fit = Fit(algorithm, train, settings);
    row.f1 = PredictF1(train, test, *row.train_fit);
  } catch (const std::runtime_error& e) {
    row.error = e.what();
  }
  return row;
}

ComparisonReport CompareAlgorithms(const Dataset& dataset,
                                   std::span<const Algorithm> algorithms,
                                   std::uint64_t split_seed,
                                   const AlgorithmSettings& settings,
                                   double train_fraction) {
  if (algorithms.empty()) {
    throw ValidationError("compare needs at least one algorithm");
  }
  std::vector<Algorithm> selected;
  for (Algorithm algorithm : algorithms) {
    if (std::find(selected.begin(), selected.end(), algorithm) == selected.end()) {
      selected.push_back(algorithm);
    }
  }
  if (std::find(selected.begin(), selected.end(), Algorithm::kWinRate) ==
      selected.end()) {
    selected.push_back(Algorithm::kWinRate);
  }

  const auto [train, test] = SplitDataset(dataset, train_fraction, split_seed);
  ComparisonReport report;
  report.split_seed = split_seed;
  report.train_matches = train.num_matches();
  report.test_matches = test.num_matches();
  report.triples = EnumerateTriples(dataset).size();
  for (Algorithm algorithm : selected) {
    report.rows.push_back(
        EvaluateAlgorithm(dataset, train, test, algorithm, settings));
  }

  const std::size_t n = report.rows.size();
  report.spearman.assign(n, std::vector<std::optional<double>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& fa = report.rows[a].full_fit;
      const auto& fb = report.rows[b].full_fit;
      if (fa && fb) report.spearman[a][b] = Spearman(*fa, *fb);
    }
  }
  return report;
}

}  // namespace pairrank
