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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pairrank/bradley_terry.h"
#include "pairrank/elo.h"
#include "pairrank/errors.h"
#include "pairrank/glicko.h"

namespace pairrank {
namespace {

bool MajorityBeats(const PairTally& tally) { return tally.wins > tally.losses; }

double RatioProbability(double a, double b) {
  const double total = a + b;
  return total == 0.0 ? 0.5 : a / total;
}

// p(i beats j), evaluated without the complement trick.
double DirectProbability(const RankingResult& result, const Rating& a,
                         const Rating& b) {
  switch (result.algorithm) {
    case Algorithm::kElo:
      return EloExpected(a.theta, b.theta);
    case Algorithm::kGlicko: {
      const double sa = a.sigma.value_or(0.0);
      const double sb = b.sigma.value_or(0.0);
      return GlickoExpected(a.theta, b.theta, std::sqrt(sa * sa + sb * sb));
    }
    case Algorithm::kBradleyTerry:
      return BtProbability(a.theta, b.theta);
    case Algorithm::kMarkov:
    case Algorithm::kWinRate:
      return RatioProbability(a.theta, b.theta);
  }
  return 0.5;
}

std::vector<double> AverageRanks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&values](auto a, auto b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n);
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && values[order[end]] == values[order[start]]) ++end;
    const double rank = 0.5 * static_cast<double>(start + end - 1) + 1.0;
    for (std::size_t k = start; k < end; ++k) ranks[order[k]] = rank;
    start = end;
  }
  return ranks;
}

}  // namespace

std::vector<Triple> EnumerateTriples(const Dataset& dataset) {
  const std::size_t n = dataset.num_competitors();
  const auto& roster = dataset.roster();
  std::vector<Triple> triples;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !MajorityBeats(dataset.Tally(i, j))) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || !MajorityBeats(dataset.Tally(j, k))) continue;
        triples.push_back({roster[i], roster[j], roster[k]});
      }
    }
  }
  return triples;
}

std::optional<double> TransitivityScore(const Dataset& dataset,
                                        const RankingResult& result) {
  const std::vector<Triple> triples = EnumerateTriples(dataset);
  if (triples.empty()) return std::nullopt;
  std::map<CompetitorId, std::size_t> rank;
  for (std::size_t r = 0; r < result.order.size(); ++r) {
    rank.emplace(result.order[r], r);
  }
  for (const CompetitorId& id : dataset.roster()) {
    if (!rank.contains(id)) {
      throw ValidationError("ranking does not cover competitor '" + id + "'");
    }
  }
  std::size_t preserved = 0;
  for (const Triple& t : triples) {
    if (rank.at(t.i) < rank.at(t.j) && rank.at(t.j) < rank.at(t.k)) ++preserved;
  }
  return static_cast<double>(preserved) / static_cast<double>(triples.size());
}

double ProbabilityFromResult(const RankingResult& result, std::string_view i,
                             std::string_view j) {
  const Rating& a = result.RatingOf(i);
  const Rating& b = result.RatingOf(j);
  if (i <= j) return DirectProbability(result, a, b);
  return 1.0 - DirectProbability(result, b, a);
}

void ScorePrediction(PairPrediction& prediction) {
  const std::int64_t e = prediction.expected;
  const std::int64_t a = prediction.actual;
  if (e == 0 && a == 0) {
    prediction.precision = prediction.recall = prediction.f1 = 1.0;
    return;
  }
  const auto overlap = static_cast<double>(std::min(e, a));
  prediction.precision = e == 0 ? 0.0 : overlap / static_cast<double>(e);
  prediction.recall = a == 0 ? 0.0 : overlap / static_cast<double>(a);
  const double sum = prediction.precision + prediction.recall;
  prediction.f1 =
      sum == 0.0 ? 0.0 : 2.0 * prediction.precision * prediction.recall / sum;
}

F1Report PredictF1(const Dataset& /*train*/, const Dataset& test,
                   const RankingResult& result) {
  if (test.num_matches() == 0) {
    throw ValidationError("prediction needs a non-empty test set");
  }
  F1Report report;
  const std::size_t n = test.num_competitors();
  const auto& roster = test.roster();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairTally& tally = test.Tally(i, j);
      if (tally.matches() == 0) continue;
      if (!result.ratings.contains(roster[i]) ||
          !result.ratings.contains(roster[j])) {
        ++report.excluded_pairs;
        continue;
      }
      const double p = ProbabilityFromResult(result, roster[i], roster[j]);
      const double q = ProbabilityFromResult(result, roster[j], roster[i]);
      const auto m = tally.matches();
      PairPrediction forward{roster[i], roster[j], m, p,
                             static_cast<std::int64_t>(std::floor(m * p)),
                             static_cast<std::int64_t>(
                                 std::floor(tally.half_credit_wins()))};
      PairPrediction backward{roster[j], roster[i], m, q,
                              static_cast<std::int64_t>(std::floor(m * q)),
                              static_cast<std::int64_t>(
                                  std::floor(tally.half_credit_losses()))};
      ScorePrediction(forward);
      ScorePrediction(backward);
      report.pairs.push_back(std::move(forward));
      report.pairs.push_back(std::move(backward));
    }
  }

  double total = 0.0;
  for (const PairPrediction& side : report.pairs) {
    CompetitorF1& entry = report.per_competitor[side.competitor];
    entry.precision += side.precision;
    entry.recall += side.recall;
    entry.f1 += side.f1;
    ++entry.pairs;
    total += side.f1;
  }
  for (auto& [id, entry] : report.per_competitor) {
    const auto count = static_cast<double>(entry.pairs);
    entry.precision /= count;
    entry.recall /= count;
    entry.f1 /= count;
  }
  report.overall_f1 =
      report.pairs.empty() ? 0.0 : total / static_cast<double>(report.pairs.size());
  return report;
}

double SpearmanCorrelation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ValidationError("spearman inputs differ in length");
  }
  const std::size_t n = x.size();
  const std::vector<double> rx = AverageRanks(x);
  const std::vector<double> ry = AverageRanks(y);
  const double mean = 0.5 * static_cast<double>(n + 1);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dx = rx[k] - mean;
    const double dy = ry[k] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return sxx == syy ? 1.0 : 0.0;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double Spearman(const RankingResult& a, const RankingResult& b) {
  if (a.ratings.size() != b.ratings.size()) {
    throw ValidationError("spearman needs identical rosters");
  }
  std::vector<double> x;
  std::vector<double> y;
  x.reserve(a.ratings.size());
  y.reserve(a.ratings.size());
  for (const auto& [id, rating] : a.ratings) {
    auto it = b.ratings.find(id);
    if (it == b.ratings.end()) {
      throw ValidationError("spearman needs identical rosters; '" + id +
                            "' is missing from the second ranking");
    }
    x.push_back(rating.theta);
    y.push_back(it->second.theta);
  }
  return SpearmanCorrelation(x, y);
}

}  // namespace pairrank
