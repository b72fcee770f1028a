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

#include "pairrank/markov.h"

#include <cmath>
#include <cstdio>
#include <deque>
#include <ostream>

#include "pairrank/errors.h"

namespace pairrank {
namespace {

std::vector<char> Reachable(const TransitionMatrix& t, std::size_t start) {
  const std::size_t n = t.size();
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> frontier{start};
  seen[start] = 1;
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && t.at(i, j) > 0.0) {
        seen[j] = 1;
        frontier.push_back(j);
      }
    }
  }
  return seen;
}

}  // namespace

void Validate(const MarkovConfig& config) {
  if (!(config.p > 0.5 && config.p < 1.0)) {
    throw ValidationError("markov p must lie in the open interval (0.5, 1), got " +
                          std::to_string(config.p));
  }
  if (!(config.power_tol > 0.0)) {
    throw ValidationError("markov power tolerance must be > 0");
  }
  if (config.max_power_iters < 1) {
    throw ValidationError("markov max power iterations must be >= 1");
  }
  if (!(config.smoothing >= 0.0 && config.smoothing < 1.0)) {
    throw ValidationError("markov smoothing must lie in [0, 1)");
  }
}

TransitionMatrix BuildTransition(const Dataset& dataset,
                                 const MarkovConfig& config) {
  Validate(config);
  const std::size_t n = dataset.num_competitors();
  const double p = config.p;
  TransitionMatrix t;
  t.roster = dataset.roster();
  for (std::size_t i = 0; i < n; ++i) t.roster_index.emplace(t.roster[i], i);
  t.entries.assign(n * n, 0.0);
  t.config = config;

  for (std::size_t i = 0; i < n; ++i) {
    const CompetitorTotals& totals = dataset.Totals(i);
    const auto played = static_cast<double>(totals.matches());
    double* row = &t.entries[i * n];
    if (totals.matches() == 0) {
      t.isolated.push_back(t.roster[i]);
      for (std::size_t j = 0; j < n; ++j) row[j] = 1.0 / n;
      continue;
    }
    double off_diagonal = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const PairTally& tally = dataset.Tally(i, j);
      row[j] = (tally.half_credit_wins() * (1.0 - p) +
                tally.half_credit_losses() * p) /
               played;
      off_diagonal += row[j];
    }
    row[i] = (totals.half_credit_wins() * p +
              totals.half_credit_losses() * (1.0 - p)) /
             played;
    // Round-off can leave the row a few ulps away from 1.
    const double sum = off_diagonal + row[i];
    for (std::size_t j = 0; j < n; ++j) row[j] /= sum;
  }

  if (config.smoothing > 0.0) {
    for (double& entry : t.entries) {
      entry = (1.0 - config.smoothing) * entry + config.smoothing / n;
    }
  }
  return t;
}

std::size_t CountClosedClasses(const TransitionMatrix& transition) {
  const std::size_t n = transition.size();
  std::vector<std::vector<char>> reach(n);
  for (std::size_t i = 0; i < n; ++i) reach[i] = Reachable(transition, i);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool closed = true;
    bool smallest = true;
    for (std::size_t j = 0; j < n && closed; ++j) {
      if (!reach[i][j]) continue;
      if (!reach[j][i]) closed = false;
      if (j < i) smallest = false;
    }
    if (closed && smallest) ++classes;
  }
  return classes;
}

RankingResult Stationary(const TransitionMatrix& transition,
                         const MarkovConfig& config) {
  Validate(config);
  const std::size_t n = transition.size();
  if (n > 0) {
    const std::size_t classes = CountClosedClasses(transition);
    if (classes > 1) {
      throw DisconnectedChainError(
          "comparison graph splits into " + std::to_string(classes) +
              " closed components; the stationary distribution is not unique",
          classes);
    }
  }

  std::vector<double> pi(n, n > 0 ? 1.0 / n : 0.0);
  std::vector<double> next(n);
  double change = n > 0 ? 1.0 : 0.0;
  int iterations = 0;
  while (change >= config.power_tol) {
    if (iterations == config.max_power_iters) {
      throw ConvergenceError(
          "power iteration did not converge after " +
              std::to_string(config.max_power_iters) +
              " iterations (L1 change " + std::to_string(change) + ")",
          pi, change);
    }
    ++iterations;
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double mass = pi[i];
      for (std::size_t j = 0; j < n; ++j) next[j] += mass * transition.at(i, j);
    }
    double total = 0.0;
    for (double v : next) total += v;
    change = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      next[j] /= total;
      change += std::abs(next[j] - pi[j]);
    }
    pi.swap(next);
  }

  double residual = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) value += pi[i] * transition.at(i, j);
    residual += std::abs(value - pi[j]);
  }

  std::map<CompetitorId, Rating> ratings;
  for (std::size_t i = 0; i < n; ++i) {
    ratings.emplace(transition.roster[i], Rating{pi[i], std::nullopt});
  }
  RankingResult result = MakeRankingResult(Algorithm::kMarkov, std::move(ratings));
  result.hyperparameters = {{"p", transition.config.p},
                            {"power_tol", config.power_tol},
                            {"max_power_iters", config.max_power_iters},
                            {"smoothing", transition.config.smoothing}};
  result.diagnostics = {{"iterations", iterations}, {"residual", residual}};
  result.unrated = transition.isolated;
  return result;
}

RankingResult MarkovRank(const Dataset& dataset, const MarkovConfig& config) {
  return Stationary(BuildTransition(dataset, config), config);
}

void WriteMatrix(std::ostream& out, const TransitionMatrix& transition) {
  char buffer[32];
  for (std::size_t i = 0; i < transition.size(); ++i) {
    for (std::size_t j = 0; j < transition.size(); ++j) {
      std::snprintf(buffer, sizeof(buffer), "%.12f", transition.at(i, j));
      if (j > 0) out << ' ';
      out << buffer;
    }
    out << '\n';
  }
}

}  // namespace pairrank
