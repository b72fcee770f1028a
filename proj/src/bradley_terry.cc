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

#include "pairrank/bradley_terry.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "pairrank/errors.h"

namespace pairrank {
namespace {

// log(1 / (1 + exp(-x))) without overflow.
double LogSigmoid(double x) {
  return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

// Effective win counts y[i * n + j] after weighting and pseudo-counts.
std::vector<double> EffectiveCounts(const Dataset& dataset,
                                    const BtConfig& config) {
  const std::size_t n = dataset.num_competitors();
  std::vector<double> weight(n * n, 1.0);
  if (config.weighted) {
    double total = 0.0;
    std::size_t observed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto m = dataset.Tally(i, j).matches();
        if (m > 0) {
          total += 1.0 / static_cast<double>(m);
          ++observed;
        }
      }
    }
    const double scale = observed > 0 ? observed / total : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto m = dataset.Tally(i, j).matches();
        if (m > 0) weight[i * n + j] = scale / static_cast<double>(m);
      }
    }
  }
  std::vector<double> y(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      y[i * n + j] = weight[i * n + j] * dataset.Tally(i, j).half_credit_wins() +
                     config.regularization;
    }
  }
  return y;
}

double Objective(std::span<const double> y, std::span<const double> theta) {
  const std::size_t n = theta.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double count = y[i * n + j];
      if (i != j && count > 0.0) total += count * LogSigmoid(theta[i] - theta[j]);
    }
  }
  return total;
}

std::vector<double> Gradient(std::span<const double> y,
                             std::span<const double> theta) {
  const std::size_t n = theta.size();
  std::vector<double> grad(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double games = y[i * n + j] + y[j * n + i];
      grad[i] += y[i * n + j] - games * BtProbability(theta[i], theta[j]);
    }
  }
  return grad;
}

double MaxAbs(std::span<const double> values) {
  double result = 0.0;
  for (double v : values) result = std::max(result, std::abs(v));
  return result;
}

void Center(std::vector<double>& theta) {
  if (theta.empty()) return;
  const double mean =
      std::accumulate(theta.begin(), theta.end(), 0.0) / theta.size();
  for (double& t : theta) t -= mean;
}

// One cyclic MM sweep: theta_i += log(W_i / E_i), where W_i is i's effective
// win total and E_i its expected wins under the current logits.
void MmSweep(std::span<const double> y, std::vector<double>& theta) {
  const std::size_t n = theta.size();
  for (std::size_t i = 0; i < n; ++i) {
    double wins = 0.0;
    double expected = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      wins += y[i * n + j];
      expected +=
          (y[i * n + j] + y[j * n + i]) * BtProbability(theta[i], theta[j]);
    }
    // No finite update exists for a winless competitor.
    if (wins > 0.0 && expected > 0.0) theta[i] += std::log(wins / expected);
  }
}

// Newton step on the zero-sum subspace with backtracking. Returns false when
// no improving step was found.
bool NewtonStep(std::span<const double> y, std::vector<double>& theta,
                double current) {
  const auto n = static_cast<Eigen::Index>(theta.size());
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd grad(n);
  const std::vector<double> g = Gradient(y, theta);
  for (Eigen::Index i = 0; i < n; ++i) {
    grad(i) = g[i];
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double games = y[i * n + j] + y[j * n + i];
      const double p = BtProbability(theta[i], theta[j]);
      const double c = games * p * (1.0 - p);
      laplacian(i, j) -= c;
      laplacian(j, i) -= c;
      laplacian(i, i) += c;
      laplacian(j, j) += c;
    }
  }
  // The all-ones direction is the gauge; pin it with a rank-one term.
  laplacian.array() += 1.0 / static_cast<double>(n);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(laplacian);
  if (ldlt.info() != Eigen::Success) return false;
  const Eigen::VectorXd step = ldlt.solve(grad);
  if (!step.allFinite()) return false;

  std::vector<double> candidate(theta.size());
  double scale = 1.0;
  for (int attempt = 0; attempt < 30; ++attempt, scale *= 0.5) {
    for (Eigen::Index i = 0; i < n; ++i) candidate[i] = theta[i] + scale * step(i);
    if (Objective(y, candidate) >= current) {
      theta.swap(candidate);
      return true;
    }
  }
  return false;
}

std::vector<double> ThetasByIndex(const Dataset& dataset,
                                  const std::map<CompetitorId, double>& thetas) {
  std::vector<double> result(dataset.num_competitors());
  for (std::size_t i = 0; i < result.size(); ++i) {
    auto it = thetas.find(dataset.roster()[i]);
    if (it == thetas.end()) {
      throw ValidationError("missing theta for competitor '" +
                            dataset.roster()[i] + "'");
    }
    result[i] = it->second;
  }
  return result;
}

}  // namespace

void Validate(const BtConfig& config) {
  if (config.max_iters < 1) {
    throw ValidationError("bradley-terry max iterations must be >= 1");
  }
  if (!(config.tolerance > 0.0)) {
    throw ValidationError("bradley-terry tolerance must be > 0");
  }
  if (!(config.regularization >= 0.0) || !std::isfinite(config.regularization)) {
    throw ValidationError("bradley-terry regularization must be >= 0");
  }
}

double BtProbability(double theta_i, double theta_j) {
  return 1.0 / (1.0 + std::exp(-(theta_i - theta_j)));
}

double BtLogLikelihood(const Dataset& dataset,
                       const std::map<CompetitorId, double>& thetas) {
  BtConfig plain;
  plain.regularization = 0.0;
  return BtObjective(dataset, ThetasByIndex(dataset, thetas), plain);
}

double BtObjective(const Dataset& dataset, std::span<const double> thetas,
                   const BtConfig& config) {
  if (thetas.size() != dataset.num_competitors()) {
    throw ValidationError("theta vector does not match the roster size");
  }
  return Objective(EffectiveCounts(dataset, config), thetas);
}

std::vector<double> BtGradient(const Dataset& dataset,
                               std::span<const double> thetas,
                               const BtConfig& config) {
  if (thetas.size() != dataset.num_competitors()) {
    throw ValidationError("theta vector does not match the roster size");
  }
  return Gradient(EffectiveCounts(dataset, config), thetas);
}

RankingResult BtFit(const Dataset& dataset, const BtConfig& config,
                    std::span<const double> initial) {
  Validate(config);
  const std::size_t n = dataset.num_competitors();
  if (!initial.empty() && initial.size() != n) {
    throw ValidationError("initial logits do not match the roster size");
  }
  const std::vector<double> y = EffectiveCounts(dataset, config);

  std::vector<double> theta(n, 0.0);
  if (!initial.empty()) theta.assign(initial.begin(), initial.end());
  Center(theta);

  int iterations = 0;
  bool converged = n < 2;
  std::vector<double> previous;
  while (!converged && iterations < config.max_iters) {
    ++iterations;
    previous = theta;
    MmSweep(y, theta);
    Center(theta);
    NewtonStep(y, theta, Objective(y, theta));
    Center(theta);
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      change = std::max(change, std::abs(theta[i] - previous[i]));
    }
    converged = change < config.tolerance;
  }

  const double gradient_norm = MaxAbs(Gradient(y, theta));
  if (!converged) {
    throw ConvergenceError(
        "bradley-terry fit did not converge after " +
            std::to_string(config.max_iters) +
            " iterations (gradient norm " + std::to_string(gradient_norm) + ")",
        theta, gradient_norm);
  }

  std::map<CompetitorId, Rating> ratings;
  for (std::size_t i = 0; i < n; ++i) {
    ratings.emplace(dataset.roster()[i], Rating{theta[i], std::nullopt});
  }
  RankingResult result =
      MakeRankingResult(Algorithm::kBradleyTerry, std::move(ratings));
  result.hyperparameters = {{"max_iters", config.max_iters},
                            {"tolerance", config.tolerance},
                            {"weighted", config.weighted ? 1.0 : 0.0},
                            {"regularization", config.regularization}};
  result.diagnostics = {{"iterations", iterations},
                        {"gradient_norm", gradient_norm},
                        {"log_likelihood", Objective(y, theta)}};
  for (std::size_t i = 0; i < n; ++i) {
    if (dataset.Totals(i).matches() == 0) {
      result.unrated.push_back(dataset.roster()[i]);
    }
  }
  return result;
}

}  // namespace pairrank
