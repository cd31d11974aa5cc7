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

#include "fuzzyloss/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fuzzyloss/errors.hpp"
#include "fuzzyloss/gmli.hpp"

namespace fuzzyloss {
namespace {

void set_box(const std::vector<Interval>& box, std::vector<double>& mid,
             std::vector<double>& rad) {
  mid.clear();
  rad.clear();
  for (const auto& iv : box) {
    mid.push_back(iv.mid());
    rad.push_back(iv.radius());
  }
}

void label_flags(const LabelSet& cut, bool& pos, bool& neg) {
  pos = neg = false;
  for (const auto& l : cut) (binary_sign(l) > 0 ? pos : neg) = true;
}

void require_real_kind(LossKind kind) {
  if (is_margin(kind)) {
    throw IncompatibleLoss("margin losses need label-valued observations");
  }
}

void require_label_kind(LossKind kind) {
  if (kind != LossKind::ZeroOne && !is_margin(kind)) {
    throw IncompatibleLoss(std::string(to_string(kind)) +
                           " does not apply to label-valued observations");
  }
}

// Exact level segments of a label datum, or one segment per grid level.
std::vector<RiskObjective::LabelSegment> label_segments(
    const FuzzyDatum& y, const AlphaGrid& grid, LevelIntegration integration) {
  std::vector<RiskObjective::LabelSegment> out;
  auto push = [&](double weight, const LabelSet& cut) {
    RiskObjective::LabelSegment seg;
    seg.weight = weight;
    label_flags(cut, seg.pos, seg.neg);
    out.push_back(seg);
  };
  if (const auto* p = std::get_if<PreciseLabel>(&y)) {
    push(1.0, LabelSet{p->label});
    return out;
  }
  const auto& fl = std::get<FuzzyLabel>(y);
  if (integration == LevelIntegration::Quadrature) {
    for (double alpha : grid.levels()) push(grid.weight(), fl.cut(alpha));
    return out;
  }
  const std::vector<double> levels = fl.levels();
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const double next = k + 1 < levels.size() ? levels[k + 1] : 0.0;
    push(levels[k] - next, fl.cut(levels[k]));
  }
  return out;
}

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Adds d_lo * (x_low, 1) + d_hi * (x_high, 1) to the gradient, where x_low
// and x_high are the box vertices attaining the score range.
void add_range_gradient(const RangeLoss& rl, std::span<const double> w,
                        const std::vector<double>& mid,
                        const std::vector<double>& rad, bool precise,
                        double scale, double* grad) {
  const std::size_t d = w.size();
  if (precise) {
    const double g = scale * (rl.d_lo + rl.d_hi);
    for (std::size_t j = 0; j < d; ++j) grad[j] += g * mid[j];
    grad[d] += g;
    return;
  }
  for (std::size_t j = 0; j < d; ++j) {
    const double shift = sgn(w[j]) * rad[j];
    grad[j] += scale * (rl.d_lo * (mid[j] - shift) + rl.d_hi * (mid[j] + shift));
  }
  grad[d] += scale * (rl.d_lo + rl.d_hi);
}

struct Range {
  double lo;
  double hi;
  bool finite;
};

Range score_range(std::span<const double> w, double b,
                  const std::vector<double>& mid, const std::vector<double>& rad,
                  bool precise) {
  double s = b;
  double r = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * mid[j];
  if (!precise) {
    for (std::size_t j = 0; j < w.size(); ++j) r += std::abs(w[j]) * rad[j];
  }
  const bool finite = std::isfinite(s) && std::isfinite(r);
  return {s - r, s + r, finite};
}

}  // namespace

RiskObjective::RiskObjective(std::span<const Example> data, const LossSpec& loss,
                             const RiskConfig& cfg)
    : loss_(loss), cfg_(cfg), grid_(cfg.alpha_levels) {
  cfg_.validate();
  if (data.empty()) throw InvalidArgument("empty dataset");
  dim_ = data.front().inputs.size();
  const LossKind kind = loss.kind;
  const bool gmli = loss.mode == LossMode::Gmli;
  if (gmli) loss.gmli.validate();

  for (std::size_t i = 0; i < data.size(); ++i) {
    const Example& ex = data[i];
    if (ex.inputs.size() != dim_) {
      std::ostringstream msg;
      msg << "example " << i << " has " << ex.inputs.size()
          << " inputs, expected " << dim_;
      throw InvalidArgument(msg.str());
    }
    Term term;
    term.precise_inputs = has_precise_inputs(ex);
    const bool crisp_inputs = has_crisp_inputs(ex);
    set_box(input_box(ex, 1.0), term.mid, term.rad);
    const bool real = is_real_valued(ex.output);

    if (gmli) {
      if (!term.precise_inputs) {
        throw IncompatibleLoss("the likelihood baseline needs precise inputs");
      }
      if (real) {
        if (kind != LossKind::L2) {
          throw IncompatibleLoss("the likelihood baseline on real outputs uses l2");
        }
        const Trapezoid t = as_trapezoid(ex.output);
        if (t.is_point()) {
          term.kind = TermKind::GmliPrecise;
          term.target = t.b();
        } else if (t.is_crisp()) {
          term.kind = TermKind::GmliInterval;
          term.cut = t.core();
        } else {
          throw IncompatibleLoss(
              "the likelihood baseline does not support fuzzy real outputs");
        }
      } else {
        if (kind != LossKind::Logistic) {
          throw IncompatibleLoss(
              "the likelihood baseline on labels uses the logistic loss");
        }
        if (const auto* p = std::get_if<PreciseLabel>(&ex.output)) {
          term.kind = TermKind::Labels;
          term.segments = label_segments(*p, grid_, LevelIntegration::Auto);
        } else {
          const auto& fl = std::get<FuzzyLabel>(ex.output);
          int observed = 0;
          double other = 0.0;
          for (const auto& [label, degree] : fl.memberships()) {
            const int s = binary_sign(label);
            if (degree == 1.0 && observed == 0) {
              observed = s;
            } else {
              other = std::max(other, degree);
            }
          }
          if (other == 1.0) continue;  // vacuous: likelihood factor 1
          if (other == 0.0) {
            term.kind = TermKind::Labels;
            term.segments = {{1.0, observed > 0, observed < 0}};
          } else {
            term.kind = TermKind::GmliLabel;
            term.sign = observed;
            term.weight = 1.0 - other;
          }
        }
      }
      terms_.push_back(std::move(term));
      continue;
    }

    if (loss.mode == LossMode::SetMin) {
      if (!crisp_inputs || !is_crisp(ex.output)) {
        throw InvalidArgument(
            "set-minimum risk needs crisp data; use the fuzzy mode");
      }
      const Cut cut = alpha_cut(ex.output, 1.0);
      if (real) {
        require_real_kind(kind);
        term.kind = TermKind::RealCut;
        term.cut = std::get<Interval>(cut);
      } else {
        require_label_kind(kind);
        term.kind = TermKind::Labels;
        LabelSegment seg;
        label_flags(std::get<LabelSet>(cut), seg.pos, seg.neg);
        term.segments = {seg};
      }
      terms_.push_back(std::move(term));
      continue;
    }

    if (real) {
      require_real_kind(kind);
    } else {
      require_label_kind(kind);
    }
    if (crisp_inputs) {
      if (real) {
        term.kind = TermKind::RealFuzzy;
        term.output = as_trapezoid(ex.output);
      } else {
        term.kind = TermKind::Labels;
        term.segments = label_segments(ex.output, grid_, cfg_.integration);
      }
    } else {
      term.kind = TermKind::Levelwise;
      for (double alpha : grid_.levels()) {
        LevelCut lc;
        set_box(input_box(ex, alpha), lc.mid, lc.rad);
        const Cut cut = alpha_cut(ex.output, alpha);
        if (real) {
          lc.cut = std::get<Interval>(cut);
        } else {
          lc.real = false;
          label_flags(std::get<LabelSet>(cut), lc.pos, lc.neg);
        }
        term.levels.push_back(std::move(lc));
      }
    }
    terms_.push_back(std::move(term));
  }
  if (terms_.empty()) {
    throw InvalidArgument("no informative example in the dataset");
  }

  if (!gmli && kind == LossKind::L2) {
    least_squares_ = true;
    for (const auto& t : terms_) {
      const bool point_output =
          (t.kind == TermKind::RealFuzzy &&
           std::get<Trapezoid>(t.output).is_point()) ||
          (t.kind == TermKind::RealCut && t.cut.is_point());
      if (!t.precise_inputs || !point_output) {
        least_squares_ = false;
        break;
      }
    }
    if (least_squares_) {
      for (const auto& t : terms_) {
        ls_x_.insert(ls_x_.end(), t.mid.begin(), t.mid.end());
        ls_y_.push_back(t.kind == TermKind::RealCut
                            ? t.cut.lo()
                            : std::get<Trapezoid>(t.output).b());
      }
    }
  }
}

double RiskObjective::value(std::span<const double> params) const {
  return evaluate(params, nullptr);
}

double RiskObjective::value(const LinearModel& model) const {
  if (model.dimension() != dim_) {
    throw InvalidArgument("model dimension does not match the data");
  }
  const std::vector<double> p = model.parameters();
  return evaluate(p, nullptr);
}

double RiskObjective::value_and_gradient(std::span<const double> params,
                                         std::span<double> grad) const {
  if (grad.size() != num_parameters()) {
    throw InvalidArgument("gradient buffer has the wrong size");
  }
  return evaluate(params, grad.data());
}

double RiskObjective::evaluate(std::span<const double> params,
                               double* grad) const {
  if (params.size() != num_parameters()) {
    throw InvalidArgument("parameter vector has the wrong size");
  }
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  const std::span<const double> w = params.first(dim_);
  const double b = params[dim_];
  if (grad != nullptr) std::fill(grad, grad + num_parameters(), 0.0);
  const LossKind kind = loss_.kind;

  double total = 0.0;
  for (const Term& t : terms_) {
    if (t.kind == TermKind::Levelwise) {
      const double h = grid_.weight();
      double sum = 0.0;
      for (const LevelCut& lc : t.levels) {
        const Range r = score_range(w, b, lc.mid, lc.rad, false);
        if (!r.finite) {
          if (grad != nullptr) std::fill(grad, grad + num_parameters(), kNaN);
          return kNaN;
        }
        const Interval scores(r.lo, r.hi);
        const RangeLoss rl =
            lc.real ? set_loss_on_range(kind, Cut{lc.cut}, scores)
                    : binary_set_loss_on_range(kind, lc.pos, lc.neg, scores);
        sum += rl.value;
        if (grad != nullptr) add_range_gradient(rl, w, lc.mid, lc.rad, false, h, grad);
      }
      total += h * sum;
      continue;
    }

    const Range r = score_range(w, b, t.mid, t.rad, t.precise_inputs);
    if (!r.finite) {
      if (grad != nullptr) std::fill(grad, grad + num_parameters(), kNaN);
      return kNaN;
    }
    const Interval scores(r.lo, r.hi);
    RangeLoss rl;
    switch (t.kind) {
      case TermKind::RealFuzzy:
        rl = fuzzy_range_loss(kind, t.output, scores, grid_, cfg_.integration);
        break;
      case TermKind::RealCut:
        rl = set_loss_on_range(kind, Cut{t.cut}, scores);
        break;
      case TermKind::Labels:
        for (const LabelSegment& seg : t.segments) {
          rl += binary_set_loss_on_range(kind, seg.pos, seg.neg, scores)
                    .scaled(seg.weight);
        }
        break;
      case TermKind::GmliInterval:
        rl = {gmli_interval_loss(t.cut, r.lo, loss_.gmli),
              gmli_interval_derivative(t.cut, r.lo, loss_.gmli), 0.0};
        break;
      case TermKind::GmliPrecise:
        rl = {gmli_precise_loss(t.target, r.lo, loss_.gmli),
              gmli_precise_derivative(t.target, r.lo, loss_.gmli), 0.0};
        break;
      case TermKind::GmliLabel: {
        const double m = static_cast<double>(t.sign) * r.lo;
        rl = {gmli_logistic(t.weight, m),
              static_cast<double>(t.sign) * gmli_logistic_derivative(t.weight, m),
              0.0};
        break;
      }
      case TermKind::Levelwise:
        break;
    }
    total += rl.value;
    if (grad != nullptr) {
      add_range_gradient(rl, w, t.mid, t.rad, t.precise_inputs, 1.0, grad);
    }
  }

  const double n = static_cast<double>(terms_.size());
  double value = total / n;
  if (grad != nullptr) {
    for (std::size_t j = 0; j <= dim_; ++j) grad[j] /= n;
  }
  if (cfg_.complexity == Complexity::SquaredNorm && cfg_.lambda > 0.0) {
    double sq = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) {
      sq += w[j] * w[j];
      if (grad != nullptr) grad[j] += 2.0 * cfg_.lambda * w[j];
    }
    value += cfg_.lambda * sq;
  }
  return value;
}

}  // namespace fuzzyloss
