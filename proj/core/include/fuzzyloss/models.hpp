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

#include <span>
#include <vector>

#include "fuzzyloss/fuzzy_sets.hpp"

namespace fuzzyloss {

inline const Label kPositiveLabel = "+1";
inline const Label kNegativeLabel = "-1";

/// +1 for "+1" (or "1"), -1 for "-1". Throws TypeMismatch otherwise.
int binary_sign(const Label& label);
const Label& binary_label(int sign);

/// x -> w . x + b. Used as regression function and as scoring classifier.
class LinearModel {
 public:
  LinearModel() = default;
  /// Throws InvalidArgument on non-finite entries.
  LinearModel(std::vector<double> weights, double bias);

  static LinearModel zeros(std::size_t dim) {
    return LinearModel(std::vector<double>(dim, 0.0), 0.0);
  }

  std::size_t dimension() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  double bias() const { return bias_; }

  /// Parameters packed as (w_1, ..., w_d, b).
  std::vector<double> parameters() const;
  static LinearModel from_parameters(std::span<const double> params);

  friend bool operator==(const LinearModel&, const LinearModel&) = default;

 private:
  std::vector<double> weights_;
  double bias_ = 0.0;
};

/// w . x + b. Throws InvalidArgument on dimension mismatch.
double predict_score(const LinearModel& model, std::span<const double> x);

/// Sign of the score; a score of exactly 0 is classified +1.
int classify(const LinearModel& model, std::span<const double> x);

/// Exact range [s - d, s + d] of the model over a box, with s the score at the
/// box center and d = sum_j |w_j| rad(X_j).
Interval score_interval(const LinearModel& model, std::span<const Interval> box);

/// Box point at which the score equals `target`. Targets at or beyond an
/// end of score_interval(model, box) map to the extreme box vertex.
std::vector<double> point_with_score(const LinearModel& model,
                                     std::span<const Interval> box,
                                     double target);

double squared_norm(const LinearModel& model);

}  // namespace fuzzyloss
