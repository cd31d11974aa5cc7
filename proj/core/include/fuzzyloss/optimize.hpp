// Copyright 2026 The fuzzyloss Authors
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

// Model fitting by full-batch gradient descent with random restarts.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fuzzyloss/errors.hpp"
#include "fuzzyloss/fuzzy_sets.hpp"
#include "fuzzyloss/loss_spec.hpp"
#include "fuzzyloss/models.hpp"
#include "fuzzyloss/risk.hpp"

namespace fuzzyloss {

struct OptimizerConfig {
  double learning_rate = 0.1;
  std::size_t max_iters = 5000;
  double grad_tol = 1e-6;
  std::size_t restarts = 10;
  double init_scale = 1.0;
  std::uint64_t seed = 0;
  /// Solve L2 on precise data directly instead of iterating.
  bool least_squares_shortcut = true;
  /// Parameters (w, b) of the first restart; empty draws it at random too.
  std::vector<double> warm_start;

  void validate() const;
};

struct RestartTrace {
  double initial_risk = 0.0;
  double final_risk = 0.0;
  double best_risk = 0.0;
  std::size_t iterations = 0;
  bool converged = false;  // gradient norm fell below grad_tol
};

struct FitDiagnostics {
  bool least_squares = false;
  std::size_t best_restart = 0;
  std::vector<RestartTrace> restarts;
};

struct FitResult {
  LinearModel model;
  double risk = 0.0;
  FitDiagnostics diagnostics;
};

/// Thrown when the risk or its gradient stops being finite.
class NonFiniteGradient : public Error {
 public:
  NonFiniteGradient(std::vector<double> iterate, std::size_t restart,
                    std::size_t iteration);

  const std::vector<double>& iterate() const { return iterate_; }
  std::size_t restart() const { return restart_; }
  std::size_t iteration() const { return iteration_; }

 private:
  std::vector<double> iterate_;
  std::size_t restart_;
  std::size_t iteration_;
};

/// Best iterate over every restart of gradient descent on the risk selected
/// by the loss mode. Deterministic given the seed; ties keep the earliest
/// restart.
FitResult fit(std::span<const Example> data, const LossSpec& loss,
              const RiskConfig& risk_cfg = {}, const OptimizerConfig& opt = {});

/// Initial parameters (w, b) of one restart, uniform in [-scale, scale].
std::vector<double> initial_parameters(std::size_t num_parameters,
                                       const OptimizerConfig& opt,
                                       std::size_t restart);

/// Largest deviation between the analytic gradient and central differences
/// with step h, relative to the largest finite-difference component.
double gradient_check(const LossSpec& loss, const LinearModel& model,
                      std::span<const Example> data,
                      const RiskConfig& risk_cfg = {}, double h = 1e-6);

}  // namespace fuzzyloss
