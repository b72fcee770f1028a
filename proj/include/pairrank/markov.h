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

// Random-walker (Markov chain) ranking: a walker on the competitor graph
// moves toward the winner of a randomly drawn match with probability p, and
// the stationary distribution of that walk is the rating.

#ifndef PAIRRANK_MARKOV_H_
#define PAIRRANK_MARKOV_H_

#include <iosfwd>
#include <map>
#include <vector>

#include "pairrank/core.h"

namespace pairrank {

struct MarkovConfig {
  // Probability of stepping toward the winner; must lie in (0.5, 1).
  double p = 0.8;
  // Power iteration stops when the L1 change per step drops below this.
  double power_tol = 1e-12;
  int max_power_iters = 100000;
  // Weight of a uniform teleport blended into T. 0 disables it; a positive
  // value makes disconnected comparison graphs solvable.
  double smoothing = 0.0;
};

// Throws ValidationError naming the (0.5, 1) domain for a bad p, and for
// non-positive tolerance, iteration budget, or smoothing outside [0, 1).
void Validate(const MarkovConfig& config);

// Dense row-stochastic matrix over the roster order.
struct TransitionMatrix {
  std::vector<CompetitorId> roster;
  std::map<CompetitorId, std::size_t> roster_index;
  std::vector<double> entries;  // row-major, roster.size()^2
  // Competitors without matches; their rows are uniform.
  std::vector<CompetitorId> isolated;
  MarkovConfig config;

  std::size_t size() const { return roster.size(); }
  double at(std::size_t i, std::size_t j) const {
    return entries[i * roster.size() + j];
  }
};

// Off-diagonal t_ij = [w_ij (1-p) + l_ij p] / N_i and diagonal
// t_ii = [W_i p + L_i (1-p)] / N_i, with ties counted as half a win and half
// a loss and N_i the number of matches i played.
TransitionMatrix BuildTransition(const Dataset& dataset,
                                 const MarkovConfig& config);

// Number of closed communicating classes of the chain. The stationary
// distribution is unique iff this is 1.
std::size_t CountClosedClasses(const TransitionMatrix& transition);

// Stationary distribution by power iteration from the uniform vector.
// Throws DisconnectedChainError before iterating when the chain has several
// closed classes, and ConvergenceError when max_power_iters is exhausted.
RankingResult Stationary(const TransitionMatrix& transition,
                         const MarkovConfig& config);

// BuildTransition followed by Stationary.
RankingResult MarkovRank(const Dataset& dataset, const MarkovConfig& config);

// One row per line, entries separated by single spaces.
void WriteMatrix(std::ostream& out, const TransitionMatrix& transition);

}  // namespace pairrank

#endif  // PAIRRANK_MARKOV_H_
