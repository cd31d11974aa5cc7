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

#include "fuzzyloss/disambiguate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fuzzyloss/errors.hpp"

namespace fuzzyloss {
namespace {

// Target score and chosen output for one (range, cut) pair.
struct Choice {
  double target = 0.0;
  Value y;
};

Choice choose_real(LossKind kind, const Interval& range, const Interval& y) {
  if (is_margin(kind)) {
    throw IncompatibleLoss("margin losses need label-valued observations");
  }
  const double lo = std::max(range.lo(), y.lo());
  const double hi = std::min(range.hi(), y.hi());
  if (lo <= hi) return {0.5 * (lo + hi), 0.0};
  if (kind == LossKind::ZeroOne) return {range.mid(), y.mid()};
  if (range.hi() < y.lo()) return {range.hi(), y.lo()};
  return {range.lo(), y.hi()};
}

Choice choose_label(LossKind kind, const Interval& range, const LabelSet& y) {
  if (y.empty()) throw InvalidArgument("empty label set");
  bool has_pos = false;
  bool has_neg = false;
  for (const auto& l : y) (binary_sign(l) > 0 ? has_pos : has_neg) = true;

  if (kind == LossKind::ZeroOne) {
    if (has_pos && range.hi() >= 0.0) {
      return {0.5 * (std::max(range.lo(), 0.0) + range.hi()), kPositiveLabel};
    }
    if (has_neg && range.lo() < 0.0) {
      return {0.5 * (range.lo() + std::min(range.hi(), 0.0)), kNegativeLabel};
    }
    return {range.mid(), has_pos ? kPositiveLabel : kNegativeLabel};
  }
  if (!is_margin(kind)) {
    throw IncompatibleLoss(std::string(to_string(kind)) +
                           " does not apply to label-valued observations");
  }
  const bool use_pos = has_pos && (!has_neg || range.hi() >= -range.lo());
  // The hinge loss is flat beyond margin 1: every score there ties.
  const bool flat = kind == LossKind::Hinge;
  if (use_pos) {
    if (flat && range.hi() >= 1.0) {
      return {0.5 * (std::max(range.lo(), 1.0) + range.hi()), kPositiveLabel};
    }
    return {range.hi(), kPositiveLabel};
  }
  if (flat && range.lo() <= -1.0) {
    return {0.5 * (range.lo() + std::min(range.hi(), -1.0)), kNegativeLabel};
  }
  return {range.lo(), kNegativeLabel};
}

double loss_at(LossKind kind, const Value& y, double score) {
  if (const auto* yr = std::get_if<double>(&y)) {
    return base_loss(as_base(kind), *yr, score);
  }
  const int sign = binary_sign(std::get<Label>(y));
  if (kind == LossKind::ZeroOne) {
    return (score >= 0.0 ? 1 : -1) == sign ? 0.0 : 1.0;
  }
  return margin(as_margin(kind), static_cast<double>(sign) * score);
}

}  // namespace

Selection disambiguate(LossKind kind, const LinearModel& model,
                       std::span<const Interval> box, const Cut& y) {
  const Interval range = score_interval(model, box);
  Choice choice;
  if (const auto* iv = std::get_if<Interval>(&y)) {
    choice = choose_real(kind, range, *iv);
  } else {
    choice = choose_label(kind, range, std::get<LabelSet>(y));
  }
  Selection sel;
  sel.x = point_with_score(model, box, choice.target);
  sel.score = predict_score(model, sel.x);
  if (const auto* iv = std::get_if<Interval>(&y)) {
    // y* is the clamp of the optimal score, unless every y ties.
    const bool all_tie = kind == LossKind::ZeroOne && !iv->contains(choice.target);
    sel.y = all_tie ? iv->mid() : iv->clamp(choice.target);
  } else {
    sel.y = choice.y;
  }
  sel.loss = loss_at(kind, sel.y, choice.target);
  return sel;
}

Selection disambiguate(LossKind kind, const LinearModel& model,
                       const Example& example, double alpha) {
  const std::vector<Interval> box = input_box(example, alpha);
  return disambiguate(kind, model, box, alpha_cut(example.output, alpha));
}

std::vector<GradualPoint> gradual_selection(LossKind kind,
                                            const LinearModel& model,
                                            const Example& example,
                                            const AlphaGrid& grid) {
  std::vector<GradualPoint> out;
  out.reserve(grid.size());
  for (double alpha : grid.levels()) {
    out.push_back({alpha, disambiguate(kind, model, example, alpha)});
  }
  return out;
}

std::vector<double> oracle_grid(const Interval& set, double step) {
  if (!(step > 0.0)) throw InvalidArgument("grid step must be positive");
  if (set.is_point()) return {set.lo()};
  const double cells = std::ceil(set.width() / step - 1e-9);
  if (cells + 1.0 > static_cast<double>(kMaxOraclePointsPerSet)) {
    std::ostringstream msg;
    msg << "oracle grid over [" << set.lo() << ", " << set.hi() << "] with step "
        << step << " exceeds " << kMaxOraclePointsPerSet << " points";
    throw InvalidArgument(msg.str());
  }
  const auto n = static_cast<std::size_t>(std::max(cells, 1.0));
  std::vector<double> pts(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    pts[k] = set.lo() + set.width() * static_cast<double>(k) / static_cast<double>(n);
  }
  pts[n] = set.hi();
  return pts;
}

BruteForceResult brute_force_instantiation_risk(BaseLoss kind,
                                                const LinearModel& model,
                                                std::span<const Example> data,
                                                double grid_step) {
  if (data.empty()) throw InvalidArgument("empty dataset");
  if (data.size() > kMaxOracleExamples) {
    throw InvalidArgument("brute-force oracle limited to 6 examples");
  }

  // Per example: every instantiation of its sets and the loss it incurs.
  struct Candidate {
    std::vector<double> x;
    double y;
    double loss;
  };
  std::vector<std::vector<Candidate>> candidates(data.size());
  double total = 1.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Example& ex = data[i];
    if (!has_crisp_inputs(ex) || !is_real_valued(ex.output) ||
        !is_crisp(ex.output)) {
      throw InvalidArgument("brute-force oracle needs crisp real-valued data");
    }
    std::vector<std::vector<double>> grids;
    for (const auto& t : ex.inputs) grids.push_back(oracle_grid(t.core(), grid_step));
    grids.push_back(oracle_grid(as_trapezoid(ex.output).core(), grid_step));

    std::vector<std::size_t> idx(grids.size(), 0);
    while (true) {
      Candidate c;
      for (std::size_t j = 0; j + 1 < grids.size(); ++j) c.x.push_back(grids[j][idx[j]]);
      c.y = grids.back()[idx.back()];
      c.loss = base_loss(kind, c.y, predict_score(model, c.x));
      candidates[i].push_back(std::move(c));
      std::size_t j = 0;
      while (j < idx.size() && ++idx[j] == grids[j].size()) idx[j++] = 0;
      if (j == idx.size()) break;
    }
    total *= static_cast<double>(candidates[i].size());
    if (total > static_cast<double>(kMaxOracleInstantiations)) {
      throw InvalidArgument("brute-force oracle: too many instantiations");
    }
  }

  // Odometer over the joint instantiations.
  std::vector<std::size_t> pick(data.size(), 0);
  std::vector<std::size_t> best_pick = pick;
  double best = std::numeric_limits<double>::infinity();
  std::size_t evaluated = 0;
  while (true) {
    double sum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) sum += candidates[i][pick[i]].loss;
    ++evaluated;
    if (sum < best) {
      best = sum;
      best_pick = pick;
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == candidates[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }

  BruteForceResult result;
  result.risk = best / static_cast<double>(data.size());
  result.evaluated = evaluated;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Candidate& c = candidates[i][best_pick[i]];
    result.instantiation.inputs.push_back(c.x);
    result.instantiation.outputs.push_back(c.y);
  }
  return result;
}

}  // namespace fuzzyloss
