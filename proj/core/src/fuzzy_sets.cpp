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

#include "fuzzyloss/fuzzy_sets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <utility>

#include "fuzzyloss/errors.hpp"
#include "overloaded.hpp"

namespace fuzzyloss {
namespace {

using detail::Overloaded;

void check_level(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "level must lie in (0, 1], got " << alpha;
    throw InvalidArgument(msg.str());
  }
}

const double& as_real(const Value& v) {
  if (const auto* r = std::get_if<double>(&v)) return *r;
  throw TypeMismatch("label queried against real-valued datum");
}

const Label& as_label(const Value& v) {
  if (const auto* l = std::get_if<Label>(&v)) return *l;
  throw TypeMismatch("real value queried against label-valued datum");
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    std::ostringstream msg;
    msg << "invalid interval [" << lo << ", " << hi << "]";
    throw InvalidArgument(msg.str());
  }
}

double Interval::clamp(double v) const { return std::clamp(v, lo_, hi_); }

Trapezoid::Trapezoid(double a, double b, double c, double d)
    : a_(a), b_(b), c_(c), d_(d) {
  const bool finite = std::isfinite(a) && std::isfinite(b) &&
                      std::isfinite(c) && std::isfinite(d);
  if (!finite || !(a <= b && b <= c && c <= d)) {
    std::ostringstream msg;
    msg << "invalid trapezoid (" << a << ", " << b << ", " << c << ", " << d
        << "): need a <= b <= c <= d";
    throw InvalidArgument(msg.str());
  }
}

double Trapezoid::membership(double v) const {
  if (v < a_ || v > d_) return 0.0;
  if (v < b_) return (v - a_) / (b_ - a_);
  if (v <= c_) return 1.0;
  return (d_ - v) / (d_ - c_);
}

Interval Trapezoid::cut(double alpha) const {
  check_level(alpha);
  // min() guards against the endpoints crossing by one ulp at alpha = 1.
  const double lo = std::min(a_ + alpha * (b_ - a_), b_);
  const double hi = std::max(d_ - alpha * (d_ - c_), c_);
  return Interval(lo, hi);
}

FuzzyLabel::FuzzyLabel(std::map<Label, double> memberships)
    : memberships_(std::move(memberships)) {
  bool normalized = false;
  for (const auto& [label, degree] : memberships_) {
    if (!(degree >= 0.0 && degree <= 1.0)) {
      throw InvalidArgument("membership degree of label '" + label +
                            "' outside [0, 1]");
    }
    normalized = normalized || degree == 1.0;
  }
  if (!normalized) {
    throw InvalidArgument("fuzzy label needs at least one label of degree 1");
  }
}

FuzzyLabel FuzzyLabel::discounted(const Label& observed, const Label& other,
                                  double confidence) {
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw InvalidArgument("confidence must lie in [0, 1]");
  }
  if (observed == other) {
    throw InvalidArgument("discounted label needs two distinct labels");
  }
  return FuzzyLabel({{observed, 1.0}, {other, 1.0 - confidence}});
}

FuzzyLabel FuzzyLabel::vacuous(const LabelSet& labels) {
  std::map<Label, double> m;
  for (const auto& l : labels) m.emplace(l, 1.0);
  return FuzzyLabel(std::move(m));
}

double FuzzyLabel::membership(const Label& label) const {
  const auto it = memberships_.find(label);
  return it == memberships_.end() ? 0.0 : it->second;
}

LabelSet FuzzyLabel::cut(double alpha) const {
  check_level(alpha);
  LabelSet out;
  for (const auto& [label, degree] : memberships_) {
    if (degree >= alpha) out.insert(label);
  }
  return out;
}

std::vector<double> FuzzyLabel::levels() const {
  std::vector<double> out;
  for (const auto& [label, degree] : memberships_) {
    if (degree > 0.0) out.push_back(degree);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_real_valued(const FuzzyDatum& datum) {
  return std::holds_alternative<PreciseReal>(datum) ||
         std::holds_alternative<Interval>(datum) ||
         std::holds_alternative<Trapezoid>(datum);
}

bool is_label_valued(const FuzzyDatum& datum) { return !is_real_valued(datum); }

bool is_crisp(const FuzzyDatum& datum) {
  return std::visit(
      Overloaded{
          [](const PreciseReal&) { return true; },
          [](const Interval&) { return true; },
          [](const Trapezoid& t) { return t.is_crisp(); },
          [](const FuzzyLabel& l) { return l.levels().size() == 1; },
          [](const PreciseLabel&) { return true; },
      },
      datum);
}

double membership(const FuzzyDatum& datum, const Value& v) {
  return std::visit(
      Overloaded{
          [&](const PreciseReal& p) { return as_real(v) == p.value ? 1.0 : 0.0; },
          [&](const Interval& iv) { return iv.contains(as_real(v)) ? 1.0 : 0.0; },
          [&](const Trapezoid& t) { return t.membership(as_real(v)); },
          [&](const FuzzyLabel& l) { return l.membership(as_label(v)); },
          [&](const PreciseLabel& p) {
            return as_label(v) == p.label ? 1.0 : 0.0;
          },
      },
      datum);
}

Cut alpha_cut(const FuzzyDatum& datum, double alpha) {
  check_level(alpha);
  return std::visit(
      Overloaded{
          [](const PreciseReal& p) -> Cut { return Interval::point(p.value); },
          [](const Interval& iv) -> Cut { return iv; },
          [&](const Trapezoid& t) -> Cut { return t.cut(alpha); },
          [&](const FuzzyLabel& l) -> Cut { return l.cut(alpha); },
          [](const PreciseLabel& p) -> Cut { return LabelSet{p.label}; },
      },
      datum);
}

Cut support_cut(const FuzzyDatum& datum, double min_level) {
  return alpha_cut(datum, min_level);
}

Trapezoid as_trapezoid(const FuzzyDatum& datum) {
  return std::visit(
      Overloaded{
          [](const PreciseReal& p) { return Trapezoid::point(p.value); },
          [](const Interval& iv) { return Trapezoid::crisp(iv); },
          [](const Trapezoid& t) { return t; },
          [](const FuzzyLabel&) -> Trapezoid {
            throw TypeMismatch("label datum has no trapezoid form");
          },
          [](const PreciseLabel&) -> Trapezoid {
            throw TypeMismatch("label datum has no trapezoid form");
          },
      },
      datum);
}

bool cut_contains(const Cut& cut, const Value& v) {
  if (const auto* iv = std::get_if<Interval>(&cut)) {
    return iv->contains(as_real(v));
  }
  const auto& labels = std::get<LabelSet>(cut);
  return labels.count(as_label(v)) > 0;
}

bool cut_is_subset(const Cut& inner, const Cut& outer) {
  if (inner.index() != outer.index()) {
    throw TypeMismatch("cannot compare a real cut with a label cut");
  }
  if (const auto* iv = std::get_if<Interval>(&inner)) {
    return std::get<Interval>(outer).contains(*iv);
  }
  const auto& a = std::get<LabelSet>(inner);
  const auto& b = std::get<LabelSet>(outer);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Example make_precise_example(std::vector<double> x, double y) {
  return make_example(std::move(x), PreciseReal{y});
}

Example make_example(std::vector<double> x, FuzzyDatum y) {
  Example ex;
  ex.inputs.reserve(x.size());
  for (double v : x) ex.inputs.push_back(Trapezoid::point(v));
  ex.output = std::move(y);
  return ex;
}

bool has_precise_inputs(const Example& ex) {
  return std::all_of(ex.inputs.begin(), ex.inputs.end(),
                     [](const Trapezoid& t) { return t.is_point(); });
}

bool has_crisp_inputs(const Example& ex) {
  return std::all_of(ex.inputs.begin(), ex.inputs.end(),
                     [](const Trapezoid& t) { return t.is_crisp(); });
}

std::vector<Interval> input_box(const Example& ex, double alpha) {
  std::vector<Interval> box;
  box.reserve(ex.inputs.size());
  for (const auto& t : ex.inputs) box.push_back(t.cut(alpha));
  return box;
}

std::vector<double> input_point(const Example& ex) {
  std::vector<double> x;
  x.reserve(ex.inputs.size());
  for (const auto& t : ex.inputs) x.push_back(0.5 * (t.b() + t.c()));
  return x;
}

}  // namespace fuzzyloss
