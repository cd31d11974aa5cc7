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

// Generalized maximum-likelihood (GMLI) losses, kept as a baseline.
//
// A prediction y_hat is read as the mean of a Gaussian with fixed scale
// sigma; an interval observation Y costs -log P(Y_hat in Y). For a discounted
// binary label with confidence w, the logistic likelihood gives
// -log(1 - w * exp(-ys) / (1 + exp(-ys))).

#pragma once

#include "fuzzyloss/fuzzy_sets.hpp"

namespace fuzzyloss {

struct GmliConfig {
  double sigma = 1.0;
  double min_width = 1e-6;

  /// Throws InvalidArgument unless sigma > 0 and min_width > 0.
  void validate() const;
};

/// -log(Phi((hi - y_hat)/sigma) - Phi((lo - y_hat)/sigma)); strictly positive.
/// Throws DegenerateInterval when the interval is narrower than min_width.
double gmli_interval_loss(const Interval& y, double y_hat,
                          const GmliConfig& cfg = {});
/// d/dy_hat of gmli_interval_loss.
double gmli_interval_derivative(const Interval& y, double y_hat,
                                const GmliConfig& cfg = {});

/// gmli_interval_loss minus its minimum, attained at the interval midpoint.
double normalized_gmli_interval_loss(const Interval& y, double y_hat,
                                     const GmliConfig& cfg = {});

/// Gaussian negative log-likelihood of a precise observation.
double gmli_precise_loss(double y, double y_hat, const GmliConfig& cfg = {});
double gmli_precise_derivative(double y, double y_hat,
                               const GmliConfig& cfg = {});

/// GMLI logistic loss of a label observed with confidence w in [0, 1].
/// w = 1 is the logistic loss; w = 0 is identically 0.
double gmli_logistic_loss(double w, int y, double s);
/// The same loss as a function of the margin t = y s, and its derivative.
double gmli_logistic(double w, double t);
double gmli_logistic_derivative(double w, double t);

}  // namespace fuzzyloss
