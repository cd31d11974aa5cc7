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

// Imprecise and fuzzy observations.
//
// Real-valued observations are closed intervals or trapezoidal fuzzy numbers
// (precise values and intervals being degenerate trapezoids). Label-valued
// observations are normalized possibility distributions over a finite label
// alphabet. All cuts are closed sets.

#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fuzzyloss {

/// Smallest level used when a support is requested; the open support itself
/// is not the cut of any level in (0, 1].
inline constexpr double kDefaultSupportLevel = 1e-9;

/// Closed, bounded interval [lo, hi].
class Interval {
 public:
  constexpr Interval() = default;
  /// Throws InvalidArgument unless lo <= hi and both are finite.
  Interval(double lo, double hi);

  static Interval point(double v) { return Interval(v, v); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double radius() const { return 0.5 * (hi_ - lo_); }
  bool is_point() const { return lo_ == hi_; }

  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  double clamp(double v) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// Trapezoidal fuzzy number with support [a, d] and core [b, c].
class Trapezoid {
 public:
  /// Throws InvalidArgument unless a <= b <= c <= d, all finite.
  Trapezoid(double a, double b, double c, double d);

  static Trapezoid point(double v) { return Trapezoid(v, v, v, v); }
  static Trapezoid crisp(const Interval& iv) {
    return Trapezoid(iv.lo(), iv.lo(), iv.hi(), iv.hi());
  }
  static Trapezoid triangular(double left, double peak, double right) {
    return Trapezoid(left, peak, peak, right);
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  Interval core() const { return Interval(b_, c_); }
  Interval support() const { return Interval(a_, d_); }
  /// True when every cut is the same interval (a == b and c == d).
  bool is_crisp() const { return a_ == b_ && c_ == d_; }
  bool is_point() const { return a_ == d_; }

  double membership(double v) const;
  /// Closed level cut [a + alpha (b - a), d - alpha (d - c)].
  Interval cut(double alpha) const;

  friend bool operator==(const Trapezoid&, const Trapezoid&) = default;

 private:
  double a_, b_, c_, d_;
};

using Label = std::string;
using LabelSet = std::set<Label>;

/// Possibility distribution over labels. At least one label has degree 1.
class FuzzyLabel {
 public:
  /// Throws InvalidArgument on degrees outside [0, 1] or no degree equal to 1.
  explicit FuzzyLabel(std::map<Label, double> memberships);

  /// Degree 1 for `observed`, 1 - confidence for `other`.
  static FuzzyLabel discounted(const Label& observed, const Label& other,
                               double confidence);
  /// Every label fully plausible.
  static FuzzyLabel vacuous(const LabelSet& labels);

  double membership(const Label& label) const;
  LabelSet cut(double alpha) const;
  const std::map<Label, double>& memberships() const { return memberships_; }
  /// Distinct positive degrees in descending order; the first one is 1.
  std::vector<double> levels() const;

  friend bool operator==(const FuzzyLabel&, const FuzzyLabel&) = default;

 private:
  std::map<Label, double> memberships_;
};

struct PreciseReal {
  double value = 0.0;
  friend bool operator==(const PreciseReal&, const PreciseReal&) = default;
};

struct PreciseLabel {
  Label label;
  friend bool operator==(const PreciseLabel&, const PreciseLabel&) = default;
};

/// One imprecise observation of an output.
using FuzzyDatum =
    std::variant<PreciseReal, Interval, Trapezoid, FuzzyLabel, PreciseLabel>;

/// A precise output value: a real number or a label.
using Value = std::variant<double, Label>;

/// A level cut: an interval for real data, a label subset for label data.
using Cut = std::variant<Interval, LabelSet>;

bool is_real_valued(const FuzzyDatum& datum);
bool is_label_valued(const FuzzyDatum& datum);
/// True when all level cuts coincide (precise values, intervals, crisp label
/// subsets).
bool is_crisp(const FuzzyDatum& datum);

/// Membership degree of `v` in `datum`; indicator for precise and crisp data.
/// Throws TypeMismatch when a real is queried against label data and back.
double membership(const FuzzyDatum& datum, const Value& v);

/// {v : membership(datum, v) >= alpha}. Throws InvalidArgument unless
/// 0 < alpha <= 1.
Cut alpha_cut(const FuzzyDatum& datum, double alpha);

/// Cut at a small positive level standing in for the support.
Cut support_cut(const FuzzyDatum& datum,
                double min_level = kDefaultSupportLevel);

/// Trapezoid view of a real datum (precise and interval data degenerate).
/// Throws TypeMismatch for label data.
Trapezoid as_trapezoid(const FuzzyDatum& datum);

bool cut_contains(const Cut& cut, const Value& v);
bool cut_is_subset(const Cut& inner, const Cut& outer);

/// One training record. Inputs are per-coordinate trapezoids: precise
/// coordinates and intervals are degenerate trapezoids.
struct Example {
  std::vector<Trapezoid> inputs;
  FuzzyDatum output;
};

/// Example with precise inputs and a precise real output.
Example make_precise_example(std::vector<double> x, double y);
/// Example with precise inputs and an arbitrary output.
Example make_example(std::vector<double> x, FuzzyDatum y);

bool has_precise_inputs(const Example& ex);
bool has_crisp_inputs(const Example& ex);
/// Per-coordinate cut of the inputs: the box X_alpha.
std::vector<Interval> input_box(const Example& ex, double alpha = 1.0);
/// Midpoints of the input core; the coordinates when inputs are precise.
std::vector<double> input_point(const Example& ex);

}  // namespace fuzzyloss
