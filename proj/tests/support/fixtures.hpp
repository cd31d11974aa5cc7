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

// Shared data fixtures and random generators for tests.

#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "fuzzyloss/fuzzy_sets.hpp"
#include "fuzzyloss/models.hpp"

namespace fixtures {

using fuzzyloss::Example;
using fuzzyloss::FuzzyDatum;
using fuzzyloss::FuzzyLabel;
using fuzzyloss::Interval;
using fuzzyloss::LinearModel;
using fuzzyloss::PreciseLabel;
using fuzzyloss::PreciseReal;
using fuzzyloss::Trapezoid;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random trapezoid inside [lo, hi]; some draws are triangular, crisp or
/// degenerate.
inline Trapezoid random_trapezoid(std::mt19937_64& rng, double lo = -5.0,
                                  double hi = 5.0) {
  std::array<double, 4> p{uniform(rng, lo, hi), uniform(rng, lo, hi),
                          uniform(rng, lo, hi), uniform(rng, lo, hi)};
  std::sort(p.begin(), p.end());
  switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
    case 0: return Trapezoid(p[0], p[1], p[1], p[3]);  // triangular
    case 1: return Trapezoid(p[0], p[0], p[3], p[3]);  // interval
    case 2: return Trapezoid::point(p[1]);
    default: return Trapezoid(p[0], p[1], p[2], p[3]);
  }
}

inline FuzzyLabel random_fuzzy_label(std::mt19937_64& rng) {
  const bool pos = uniform(rng, 0.0, 1.0) < 0.5;
  const double other = std::uniform_int_distribution<int>(0, 4)(rng) == 0
                           ? 1.0
                           : uniform(rng, 0.0, 1.0);
  return FuzzyLabel::discounted(pos ? "+1" : "-1", pos ? "-1" : "+1", 1.0 - other);
}

inline LinearModel random_model(std::mt19937_64& rng, std::size_t dim,
                                double scale = 2.0) {
  std::vector<double> w(dim);
  for (double& v : w) v = uniform(rng, -scale, scale);
  return LinearModel(std::move(w), uniform(rng, -scale, scale));
}

/// Random real-output example; inputs fuzzy when `fuzzy_inputs`.
inline Example random_real_example(std::mt19937_64& rng, std::size_t dim,
                                   bool fuzzy_inputs) {
  Example ex;
  for (std::size_t j = 0; j < dim; ++j) {
    ex.inputs.push_back(fuzzy_inputs ? random_trapezoid(rng, -2.0, 2.0)
                                     : Trapezoid::point(uniform(rng, -2.0, 2.0)));
  }
  ex.output = random_trapezoid(rng);
  return ex;
}

inline Example random_label_example(std::mt19937_64& rng, std::size_t dim,
                                    bool fuzzy_inputs) {
  Example ex = random_real_example(rng, dim, fuzzy_inputs);
  ex.output = random_fuzzy_label(rng);
  return ex;
}

/// Interval outputs around the line y = 1 + x / 2 that only the line itself
/// meets: it touches the upper ends at x = 0 and x = 4 and the lower end at
/// x = 2, so every zero-risk linear model coincides with it.
inline std::vector<Example> collinear_interval_data() {
  return {
      fuzzyloss::make_example({0.0}, Interval(0.2, 1.0)),
      fuzzyloss::make_example({2.0}, Interval(2.0, 3.1)),
      fuzzyloss::make_example({4.0}, Interval(2.4, 3.0)),
      fuzzyloss::make_example({6.0}, Interval(3.0, 5.0)),
  };
}
inline constexpr double kCollinearSlope = 0.5;
inline constexpr double kCollinearIntercept = 1.0;

/// Interval outputs no line can meet all at once.
inline std::vector<Example> interval_toy() {
  return {
      fuzzyloss::make_example({0.0}, Interval(0.0, 0.5)),
      fuzzyloss::make_example({1.0}, Interval(2.0, 2.5)),
      fuzzyloss::make_example({2.0}, Interval(1.0, 1.5)),
      fuzzyloss::make_example({3.0}, Interval(3.5, 4.0)),
  };
}

/// A wide and a narrow triangular observation with three lines whose risk
/// functions cross pairwise, so none dominates another.
inline std::vector<Example> crossing_fuzzy_data() {
  return {
      fuzzyloss::make_example({0.0}, Trapezoid(-4.0, 0.0, 0.0, 4.0)),
      fuzzyloss::make_example({1.0}, Trapezoid(0.9, 1.0, 1.0, 1.1)),
  };
}
inline std::vector<LinearModel> crossing_models() {
  return {LinearModel({1.5}, 0.0), LinearModel({-2.0}, 3.0), LinearModel({-0.3}, 1.5)};
}

}  // namespace fixtures
