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

#ifndef PAIRRANK_ERRORS_H_
#define PAIRRANK_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairrank {

// Bad input: malformed files, out-of-domain parameters, inconsistent rosters.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A dataset file that does not parse. `line` is 1-based; 0 when unknown.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, std::size_t line)
      : ValidationError(line == 0 ? message
                                  : "line " + std::to_string(line) + ": " +
                                        message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Numerical failure on valid input.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative solver ran out of iterations. Carries the best iterate seen
// and the residual measure the solver was driving to zero (gradient norm for
// likelihood fits, L1 change for power iteration).
class ConvergenceError : public ComputationError {
 public:
  ConvergenceError(const std::string& message, std::vector<double> best,
                   double residual)
      : ComputationError(message),
        best_iterate_(std::move(best)),
        residual_(residual) {}

  const std::vector<double>& best_iterate() const { return best_iterate_; }
  double residual() const { return residual_; }

 private:
  std::vector<double> best_iterate_;
  double residual_;
};

// The Markov chain has more than one closed communicating class, so the
// stationary distribution is not unique.
class DisconnectedChainError : public ComputationError {
 public:
  DisconnectedChainError(const std::string& message, std::size_t components)
      : ComputationError(message), components_(components) {}

  std::size_t components() const { return components_; }

 private:
  std::size_t components_;
};

}  // namespace pairrank

#endif  // PAIRRANK_ERRORS_H_
