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

// Base losses and their generalization to set-valued and fuzzy observations.
//
// A set-valued observation Y is scored by the smallest loss over its
// elements; a fuzzy observation by integrating that set loss over the level
// cuts of Y. When the inputs are boxes, a linear model yields a score range
// [lo, hi] rather than a single score, and the minimum runs over both the
// range and Y. Derivatives are reported with respect to the two endpoints of
// the score range, which is all a gradient method needs for linear models.
//
// Subgradients at kinks: the zero element of the subdifferential when it
// contains 0, otherwise the one-sided derivative from the smooth side.

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fuzzyloss/fuzzy_sets.hpp"
#include "fuzzyloss/models.hpp"

namespace fuzzyloss {

enum class BaseLoss { L1, L2, ZeroOne };
enum class MarginLoss { Hinge, Exponential, Logistic };
enum class LossKind { L1, L2, ZeroOne, Hinge, Exponential, Logistic };

constexpr LossKind to_kind(BaseLoss l) {
  switch (l) {
    case BaseLoss::L1: return LossKind::L1;
    case BaseLoss::L2: return LossKind::L2;
    case BaseLoss::ZeroOne: return LossKind::ZeroOne;
  }
  return LossKind::L1;
}
constexpr LossKind to_kind(MarginLoss l) {
  switch (l) {
    case MarginLoss::Hinge: return LossKind::Hinge;
    case MarginLoss::Exponential: return LossKind::Exponential;
    case MarginLoss::Logistic: return LossKind::Logistic;
  }
  return LossKind::Hinge;
}
constexpr bool is_margin(LossKind k) {
  return k == LossKind::Hinge || k == LossKind::Exponential ||
         k == LossKind::Logistic;
}
/// Throws IncompatibleLoss when the kind is not of the requested family.
BaseLoss as_base(LossKind k);
MarginLoss as_margin(LossKind k);

std::string_view to_string(LossKind k);
/// Accepts l1, l2, zero-one (01), hinge, exp (exponential), logistic (log).
LossKind parse_loss_kind(std::string_view name);

/// L1 = |y - y_hat|, L2 = (y - y_hat)^2, ZeroOne = [y != y_hat].
double base_loss(BaseLoss kind, double y, double y_hat);
/// Same, for values that may be labels; only ZeroOne accepts labels, other
/// kinds throw IncompatibleLoss. Mixed operands throw TypeMismatch.
double base_loss(BaseLoss kind, const Value& y, const Value& y_hat);

/// f(t) for the margin t = y s.
double margin(MarginLoss kind, double t);
double margin_derivative(MarginLoss kind, double t);
/// f(y s); y must be +1 or -1.
double margin_loss(MarginLoss kind, int y, double s);

struct RealSetLoss {
  double loss = 0.0;
  double y_star = 0.0;
};
/// min over y in Y of L(y, y_hat) and its minimizer.
RealSetLoss set_loss(BaseLoss kind, const Interval& y, double y_hat);

struct LabelSetLoss {
  double loss = 0.0;
  Label y_star;
};
/// ZeroOne only; other kinds throw IncompatibleLoss. Throws InvalidArgument on
/// an empty set.
LabelSetLoss set_loss(BaseLoss kind, const LabelSet& y, const Label& y_hat);

/// Loss value with derivatives with respect to the endpoints of the score
/// range it was evaluated on.
struct RangeLoss {
  double value = 0.0;
  double d_lo = 0.0;
  double d_hi = 0.0;

  RangeLoss& operator+=(const RangeLoss& o) {
    value += o.value;
    d_lo += o.d_lo;
    d_hi += o.d_hi;
    return *this;
  }
  RangeLoss scaled(double w) const { return {w * value, w * d_lo, w * d_hi}; }
};

/// min over (score, y) in [lo, hi] x Y of the loss. Real losses need an
/// interval cut, margin losses a binary label cut.
RangeLoss set_loss_on_range(LossKind kind, const Cut& y, const Interval& scores);

/// Set loss over a binary label cut given by which of +1 / -1 it holds.
RangeLoss binary_set_loss_on_range(LossKind kind, bool has_pos, bool has_neg,
                                   const Interval& scores);

/// min over (x, y) in X x Y of L(y, M(x)) for a linear model and a box X.
double set_loss_xy(LossKind kind, const LinearModel& model,
                   std::span<const Interval> box, const Cut& y);

/// Midpoint rule on K uniform levels: alpha_k = (k + 1/2) / K.
class AlphaGrid {
 public:
  static constexpr std::size_t kDefaultLevels = 101;

  explicit AlphaGrid(std::size_t levels = kDefaultLevels);

  std::size_t size() const { return levels_.size(); }
  double level(std::size_t k) const { return levels_[k]; }
  double weight() const { return 1.0 / static_cast<double>(levels_.size()); }
  const std::vector<double>& levels() const { return levels_; }

  friend bool operator==(const AlphaGrid&, const AlphaGrid&) = default;

 private:
  std::vector<double> levels_;
};

/// Auto uses the exact level integral whenever the (loss, datum) pair admits
/// one and falls back to the grid otherwise.
enum class LevelIntegration { Auto, Quadrature };

/// Integral over levels of set_loss_on_range on the cuts of `y`.
RangeLoss fuzzy_range_loss(LossKind kind, const FuzzyDatum& y,
                           const Interval& scores, const AlphaGrid& grid = AlphaGrid(),
                           LevelIntegration integration = LevelIntegration::Auto);

/// Integral over levels of set_loss on the cuts of a real-valued datum.
/// Throws TypeMismatch for label data (see fuzzy_label_loss).
double fuzzy_loss(BaseLoss kind, const FuzzyDatum& y, double y_hat,
                  const AlphaGrid& grid = AlphaGrid(),
                  LevelIntegration integration = LevelIntegration::Auto);

/// Exact fuzzy L1 loss of a trapezoid: zero on the core, quadratic on each
/// ramp, linear beyond the support. Reduces to the epsilon-insensitive loss
/// for intervals and to a Huber loss for symmetric triangles.
double closed_form_fuzzy_l1(const Trapezoid& y, double y_hat);
/// d/dy_hat of closed_form_fuzzy_l1.
double closed_form_fuzzy_l1_derivative(const Trapezoid& y, double y_hat);

/// Fuzzy 0/1 loss: 1 - membership of the predicted label.
double fuzzy_label_loss(const FuzzyLabel& y, const Label& y_hat);

/// w f(ys) + (1 - w) f(|ys|): the fuzzy loss of a binary label observed with
/// confidence w.
double fuzzy_margin_loss(MarginLoss kind, double w, int y, double s);

/// f(y s + d): the margin loss of a precise label when the score is only known
/// to lie in [s - d, s + d].
double shifted_margin_loss(MarginLoss kind, int y, double s, double d);

}  // namespace fuzzyloss
