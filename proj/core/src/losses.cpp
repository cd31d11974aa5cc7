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

#include "fuzzyloss/losses.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzyloss/errors.hpp"
#include "overloaded.hpp"

namespace fuzzyloss {
namespace {

using detail::Overloaded;

// Level integral of max(0, excess(alpha)) (or its square) over one ramp of
// a trapezoid, where `excess` is how far the prediction lies beyond the core
// edge and `ramp` is the width of that ramp. The cut edge recedes linearly
// from the support edge (alpha = 0) to the core edge (alpha = 1).
struct SideIntegral {
  double value = 0.0;
  double slope = 0.0;  // derivative with respect to `excess`
};

SideIntegral side_integral(BaseLoss kind, double excess, double ramp) {
  if (excess <= 0.0) return {};
  const bool beyond_support = excess >= ramp;
  switch (kind) {
    case BaseLoss::L1:
      if (beyond_support) return {excess - 0.5 * ramp, 1.0};
      return {0.5 * excess * excess / ramp, excess / ramp};
    case BaseLoss::L2:
      if (beyond_support) {
        return {excess * excess - excess * ramp + ramp * ramp / 3.0,
                2.0 * excess - ramp};
      }
      return {excess * excess * excess / (3.0 * ramp), excess * excess / ramp};
    case BaseLoss::ZeroOne:
      break;
  }
  return {};
}

// Largest membership over [lo, hi].
double sup_membership(const Trapezoid& t, const Interval& range) {
  if (range.hi() < t.b()) return t.membership(range.hi());
  if (range.lo() > t.c()) return t.membership(range.lo());
  return 1.0;
}

RangeLoss real_closed_form(LossKind kind, const Trapezoid& t,
                           const Interval& scores) {
  const BaseLoss base = as_base(kind);
  if (base == BaseLoss::ZeroOne) {
    return {1.0 - sup_membership(t, scores), 0.0, 0.0};
  }
  // Scores beyond the core on the right are judged by the low end of the
  // range, scores short of it by the high end; at most one side is active.
  const SideIntegral right = side_integral(base, scores.lo() - t.c(), t.d() - t.c());
  const SideIntegral left = side_integral(base, t.b() - scores.hi(), t.b() - t.a());
  return {right.value + left.value, right.slope, -left.slope};
}

// Cuts of a label datum as (level width, cut) segments; exact because the
// cut only changes at the membership degrees.
template <class Fn>
RangeLoss integrate_label_levels(const FuzzyDatum& y, Fn&& at_cut) {
  if (const auto* p = std::get_if<PreciseLabel>(&y)) {
    return at_cut(LabelSet{p->label});
  }
  const auto& fl = std::get<FuzzyLabel>(y);
  const std::vector<double> levels = fl.levels();
  RangeLoss total;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const double next = k + 1 < levels.size() ? levels[k + 1] : 0.0;
    const double width = levels[k] - next;
    total += at_cut(fl.cut(levels[k])).scaled(width);
  }
  return total;
}

}  // namespace

BaseLoss as_base(LossKind k) {
  switch (k) {
    case LossKind::L1: return BaseLoss::L1;
    case LossKind::L2: return BaseLoss::L2;
    case LossKind::ZeroOne: return BaseLoss::ZeroOne;
    default: break;
  }
  throw IncompatibleLoss(std::string(to_string(k)) + " is not a base loss");
}

MarginLoss as_margin(LossKind k) {
  switch (k) {
    case LossKind::Hinge: return MarginLoss::Hinge;
    case LossKind::Exponential: return MarginLoss::Exponential;
    case LossKind::Logistic: return MarginLoss::Logistic;
    default: break;
  }
  throw IncompatibleLoss(std::string(to_string(k)) + " is not a margin loss");
}

std::string_view to_string(LossKind k) {
  switch (k) {
    case LossKind::L1: return "l1";
    case LossKind::L2: return "l2";
    case LossKind::ZeroOne: return "zero-one";
    case LossKind::Hinge: return "hinge";
    case LossKind::Exponential: return "exp";
    case LossKind::Logistic: return "logistic";
  }
  return "?";
}

LossKind parse_loss_kind(std::string_view name) {
  if (name == "l1") return LossKind::L1;
  if (name == "l2") return LossKind::L2;
  if (name == "zero-one" || name == "01") return LossKind::ZeroOne;
  if (name == "hinge") return LossKind::Hinge;
  if (name == "exp" || name == "exponential") return LossKind::Exponential;
  if (name == "logistic" || name == "log") return LossKind::Logistic;
  throw InvalidArgument("unknown loss '" + std::string(name) + "'");
}

double base_loss(BaseLoss kind, double y, double y_hat) {
  switch (kind) {
    case BaseLoss::L1: return std::abs(y - y_hat);
    case BaseLoss::L2: return (y - y_hat) * (y - y_hat);
    case BaseLoss::ZeroOne: return y != y_hat ? 1.0 : 0.0;
  }
  return 0.0;
}

double base_loss(BaseLoss kind, const Value& y, const Value& y_hat) {
  if (y.index() != y_hat.index()) {
    throw TypeMismatch("loss operands must both be reals or both be labels");
  }
  if (const auto* yr = std::get_if<double>(&y)) {
    return base_loss(kind, *yr, std::get<double>(y_hat));
  }
  if (kind != BaseLoss::ZeroOne) {
    throw IncompatibleLoss("only the 0/1 loss applies to labels");
  }
  return std::get<Label>(y) != std::get<Label>(y_hat) ? 1.0 : 0.0;
}

double margin(MarginLoss kind, double t) {
  switch (kind) {
    case MarginLoss::Hinge: return std::max(1.0 - t, 0.0);
    case MarginLoss::Exponential: return std::exp(-t);
    case MarginLoss::Logistic:
      return t > 0.0 ? std::log1p(std::exp(-t)) : -t + std::log1p(std::exp(t));
  }
  return 0.0;
}

double margin_derivative(MarginLoss kind, double t) {
  switch (kind) {
    case MarginLoss::Hinge: return t < 1.0 ? -1.0 : 0.0;
    case MarginLoss::Exponential: return -std::exp(-t);
    case MarginLoss::Logistic:
      if (t > 0.0) {
        const double e = std::exp(-t);
        return -e / (1.0 + e);
      }
      return -1.0 / (1.0 + std::exp(t));
  }
  return 0.0;
}

double margin_loss(MarginLoss kind, int y, double s) {
  if (y != 1 && y != -1) throw InvalidArgument("label must be +1 or -1");
  return margin(kind, static_cast<double>(y) * s);
}

RealSetLoss set_loss(BaseLoss kind, const Interval& y, double y_hat) {
  if (kind == BaseLoss::ZeroOne && !y.contains(y_hat)) {
    // Every element ties at loss 1.
    return {1.0, y.mid()};
  }
  const double y_star = y.clamp(y_hat);
  return {base_loss(kind, y_star, y_hat), y_star};
}

LabelSetLoss set_loss(BaseLoss kind, const LabelSet& y, const Label& y_hat) {
  if (kind != BaseLoss::ZeroOne) {
    throw IncompatibleLoss("only the 0/1 loss applies to labels");
  }
  if (y.empty()) throw InvalidArgument("empty label set");
  if (y.count(y_hat) > 0) return {0.0, y_hat};
  return {1.0, *y.begin()};
}

RangeLoss set_loss_on_range(LossKind kind, const Cut& y, const Interval& scores) {
  if (const auto* iv = std::get_if<Interval>(&y)) {
    if (is_margin(kind)) {
      throw IncompatibleLoss("margin losses need label-valued observations");
    }
    const BaseLoss base = as_base(kind);
    const double below = iv->lo() - scores.hi();  // all scores too small
    const double above = scores.lo() - iv->hi();  // all scores too large
    if (below > 0.0) {
      switch (base) {
        case BaseLoss::L1: return {below, 0.0, -1.0};
        case BaseLoss::L2: return {below * below, 0.0, -2.0 * below};
        case BaseLoss::ZeroOne: return {1.0, 0.0, 0.0};
      }
    }
    if (above > 0.0) {
      switch (base) {
        case BaseLoss::L1: return {above, 1.0, 0.0};
        case BaseLoss::L2: return {above * above, 2.0 * above, 0.0};
        case BaseLoss::ZeroOne: return {1.0, 0.0, 0.0};
      }
    }
    return {};
  }

  const auto& labels = std::get<LabelSet>(y);
  if (labels.empty()) throw InvalidArgument("empty label set");
  bool has_pos = false;
  bool has_neg = false;
  for (const auto& l : labels) {
    (binary_sign(l) > 0 ? has_pos : has_neg) = true;
  }
  return binary_set_loss_on_range(kind, has_pos, has_neg, scores);
}

RangeLoss binary_set_loss_on_range(LossKind kind, bool has_pos, bool has_neg,
                                   const Interval& scores) {
  if (!has_pos && !has_neg) throw InvalidArgument("empty label set");
  if (kind == LossKind::ZeroOne) {
    const bool fits = (has_pos && scores.hi() >= 0.0) ||
                      (has_neg && scores.lo() < 0.0);
    return {fits ? 0.0 : 1.0, 0.0, 0.0};
  }
  if (!is_margin(kind)) {
    throw IncompatibleLoss(std::string(to_string(kind)) +
                           " does not apply to label-valued observations");
  }
  const MarginLoss f = as_margin(kind);
  // Best margin: push the score up for +1, down for -1; ties go to +1.
  const bool use_pos = has_pos && (!has_neg || scores.hi() >= -scores.lo());
  if (use_pos) {
    const double t = scores.hi();
    return {margin(f, t), 0.0, margin_derivative(f, t)};
  }
  const double t = -scores.lo();
  return {margin(f, t), -margin_derivative(f, t), 0.0};
}

double set_loss_xy(LossKind kind, const LinearModel& model,
                   std::span<const Interval> box, const Cut& y) {
  return set_loss_on_range(kind, y, score_interval(model, box)).value;
}

AlphaGrid::AlphaGrid(std::size_t levels) {
  if (levels == 0) throw InvalidArgument("level grid needs at least one level");
  levels_.resize(levels);
  const double n = static_cast<double>(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    levels_[k] = (static_cast<double>(k) + 0.5) / n;
  }
}

RangeLoss fuzzy_range_loss(LossKind kind, const FuzzyDatum& y,
                           const Interval& scores, const AlphaGrid& grid,
                           LevelIntegration integration) {
  if (integration == LevelIntegration::Quadrature) {
    RangeLoss total;
    for (double alpha : grid.levels()) {
      total += set_loss_on_range(kind, alpha_cut(y, alpha), scores);
    }
    return total.scaled(grid.weight());
  }
  if (is_real_valued(y)) {
    if (is_margin(kind)) {
      throw IncompatibleLoss("margin losses need label-valued observations");
    }
    return real_closed_form(kind, as_trapezoid(y), scores);
  }
  return integrate_label_levels(y, [&](const LabelSet& cut) {
    return set_loss_on_range(kind, cut, scores);
  });
}

double fuzzy_loss(BaseLoss kind, const FuzzyDatum& y, double y_hat,
                  const AlphaGrid& grid, LevelIntegration integration) {
  if (!is_real_valued(y)) {
    throw TypeMismatch("fuzzy_loss needs real-valued data; use fuzzy_label_loss");
  }
  return fuzzy_range_loss(to_kind(kind), y, Interval::point(y_hat), grid,
                          integration)
      .value;
}

double closed_form_fuzzy_l1(const Trapezoid& y, double y_hat) {
  return real_closed_form(LossKind::L1, y, Interval::point(y_hat)).value;
}

double closed_form_fuzzy_l1_derivative(const Trapezoid& y, double y_hat) {
  const RangeLoss r = real_closed_form(LossKind::L1, y, Interval::point(y_hat));
  return r.d_lo + r.d_hi;
}

double fuzzy_label_loss(const FuzzyLabel& y, const Label& y_hat) {
  return 1.0 - y.membership(y_hat);
}

double fuzzy_margin_loss(MarginLoss kind, double w, int y, double s) {
  if (!(w >= 0.0 && w <= 1.0)) throw InvalidArgument("w must lie in [0, 1]");
  if (y != 1 && y != -1) throw InvalidArgument("label must be +1 or -1");
  const double t = static_cast<double>(y) * s;
  const double at_abs = margin(kind, std::abs(t));
  if (t >= 0.0) return at_abs;
  const double at_t = margin(kind, t);
  if (w == 1.0) return at_t;
  // Rounding is monotone, so this form stays non-decreasing in w.
  return at_abs + w * (at_t - at_abs);
}

double shifted_margin_loss(MarginLoss kind, int y, double s, double d) {
  if (!(d >= 0.0)) throw InvalidArgument("score radius must be nonnegative");
  if (y != 1 && y != -1) throw InvalidArgument("label must be +1 or -1");
  return margin(kind, static_cast<double>(y) * s + d);
}

}  // namespace fuzzyloss
