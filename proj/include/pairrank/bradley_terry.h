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

// Bradley-Terry strengths by maximum likelihood.
//
// The likelihood is maximized with Zermelo/Hunter minorization-maximization
// sweeps, each followed by a safeguarded Newton step on the zero-sum
// subspace. MM alone crawls when a competitor is nearly undefeated (the
// optimum then sits far out, held in place only by the pseudo-counts); the
// Newton step is accepted only when it improves the objective, so the
// iteration keeps MM's monotone ascent.

#ifndef PAIRRANK_BRADLEY_TERRY_H_
#define PAIRRANK_BRADLEY_TERRY_H_

#include <map>
#include <span>
#include <vector>

#include "pairrank/core.h"

namespace pairrank {

struct BtConfig {
  int max_iters = 1000;
  // Convergence threshold on the largest absolute logit change per iteration.
  double tolerance = 1e-8;
  // Scale each pair's counts by 1 / (matches in that pair), normalized so the
  // weights of observed pairs average 1.
  bool weighted = false;
  // Pseudo-count added to the half-credit win count of every ordered pair.
  double regularization = 1e-6;
};

// Throws ValidationError unless max_iters >= 1, tolerance > 0 and
// regularization >= 0.
void Validate(const BtConfig& config);

// Logistic of the logit difference.
double BtProbability(double theta_i, double theta_j);

// Sum over ordered pairs of y_ij log p_ij with y_ij = w_ij + 0.5 t_ij.
// Throws ValidationError if `thetas` misses a roster competitor.
double BtLogLikelihood(const Dataset& dataset,
                       const std::map<CompetitorId, double>& thetas);

// The objective BtFit maximizes: the log-likelihood with pair weights and
// pseudo-counts from `config` applied. `thetas` is indexed like the roster.
double BtObjective(const Dataset& dataset, std::span<const double> thetas,
                   const BtConfig& config);

// Analytic gradient of BtObjective:
// d/dtheta_i = sum_j [y_ij - (y_ij + y_ji) p_ij].
std::vector<double> BtGradient(const Dataset& dataset,
                               std::span<const double> thetas,
                               const BtConfig& config);

// Maximum-likelihood logits with sum(theta) = 0. `initial` (roster-indexed)
// overrides the all-zero starting point. Throws ConvergenceError carrying the
// best iterate and its gradient norm when max_iters is exhausted.
RankingResult BtFit(const Dataset& dataset, const BtConfig& config,
                    std::span<const double> initial = {});

}  // namespace pairrank

#endif  // PAIRRANK_BRADLEY_TERRY_H_
