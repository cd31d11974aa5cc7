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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzyloss/fuzzy_sets.hpp"
#include "fuzzyloss/loss_spec.hpp"
#include "fuzzyloss/models.hpp"
#include "fuzzyloss/risk.hpp"

namespace fuzzyloss {

/// A risk compiled for repeated evaluation over the parameters (w, b) of a
/// linear model. Gradients are exact away from kinks; at kinks they follow
/// the one-sided conventions of the loss derivatives.
class RiskObjective {
 public:
  /// Throws InvalidArgument on empty or ragged data, IncompatibleLoss when
  /// the loss does not apply to the data.
  RiskObjective(std::span<const Example> data, const LossSpec& loss,
                const RiskConfig& cfg = {});

  std::size_t dimension() const { return dim_; }
  std::size_t num_parameters() const { return dim_ + 1; }
  /// Number of examples the risk averages over.
  std::size_t num_terms() const { return terms_.size(); }
  const LossSpec& loss() const { return loss_; }
  const RiskConfig& config() const { return cfg_; }

  double value(std::span<const double> params) const;
  double value(const LinearModel& model) const;
  /// Writes the gradient into `grad` (size num_parameters()).
  double value_and_gradient(std::span<const double> params,
                            std::span<double> grad) const;

  /// True when the risk is a plain mean squared error on precise data.
  bool is_least_squares() const { return least_squares_; }
  /// Design for least squares: row-major inputs and targets.
  const std::vector<double>& ls_inputs() const { return ls_x_; }
  const std::vector<double>& ls_targets() const { return ls_y_; }

  enum class TermKind {
    RealFuzzy,     // real output, crisp inputs, level integral of set loss
    RealCut,       // real output cut, crisp inputs, set minimum
    Labels,        // binary label segments, crisp inputs
    Levelwise,     // fuzzy inputs: one box and cut per level
    GmliInterval,  // interval output likelihood
    GmliPrecise,   // precise output likelihood
    GmliLabel,     // discounted label likelihood
  };

  struct LabelSegment {
    double weight = 1.0;
    bool pos = false;
    bool neg = false;
  };

  struct LevelCut {
    std::vector<double> mid;
    std::vector<double> rad;
    bool real = true;
    Interval cut;
    bool pos = false;
    bool neg = false;
  };

  struct Term {
    TermKind kind = TermKind::RealCut;
    std::vector<double> mid;  // box midpoints (the inputs when precise)
    std::vector<double> rad;  // box radii
    bool precise_inputs = true;
    FuzzyDatum output = PreciseReal{};
    Interval cut;
    std::vector<LabelSegment> segments;
    std::vector<LevelCut> levels;
    double target = 0.0;
    double weight = 1.0;  // GMLI label confidence
    int sign = 1;
  };

 private:
  double evaluate(std::span<const double> params, double* grad) const;

  LossSpec loss_;
  RiskConfig cfg_;
  AlphaGrid grid_;
  std::size_t dim_ = 0;
  std::vector<Term> terms_;
  bool least_squares_ = false;
  std::vector<double> ls_x_;
  std::vector<double> ls_y_;
};

}  // namespace fuzzyloss
