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

// Data disambiguation: the most plausible precise instance of an imprecise
// example under a given model, i.e. the minimizer of L(y, M(x)) over X x Y.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzyloss/fuzzy_sets.hpp"
#include "fuzzyloss/losses.hpp"
#include "fuzzyloss/models.hpp"

namespace fuzzyloss {

struct Selection {
  std::vector<double> x;  // x* in the box
  Value y;                // y* in the output cut
  double score = 0.0;     // M(x*)
  double loss = 0.0;      // L(y*, M(x*))
};

// y* and loss are taken at the optimal score itself; `score` is recomputed
// from x* and may differ from it in the last bits.

/// argmin of L(y, M(x)) over box x cut. Ties are broken toward the midpoint
/// of the tied set of scores (and toward +1 between binary labels).
Selection disambiguate(LossKind kind, const LinearModel& model,
                       std::span<const Interval> box, const Cut& y);

/// Disambiguates the level-`alpha` cut of an example.
Selection disambiguate(LossKind kind, const LinearModel& model,
                       const Example& example, double alpha = 1.0);

struct GradualPoint {
  double alpha = 0.0;
  Selection selection;
};

/// alpha -> selection on the cut at alpha, for every level of the grid.
std::vector<GradualPoint> gradual_selection(LossKind kind,
                                            const LinearModel& model,
                                            const Example& example,
                                            const AlphaGrid& grid = AlphaGrid());

// Oracle scale limits.
inline constexpr std::size_t kMaxOracleExamples = 6;
inline constexpr std::size_t kMaxOraclePointsPerSet = 50;
inline constexpr std::size_t kMaxOracleInstantiations = 50'000'000;

/// Uniform grid over an interval with spacing at most `step`, both endpoints
/// included. A degenerate interval yields its single point.
std::vector<double> oracle_grid(const Interval& set, double step);

struct Instantiation {
  std::vector<std::vector<double>> inputs;
  std::vector<double> outputs;
};

struct BruteForceResult {
  double risk = 0.0;
  Instantiation instantiation;
  std::size_t evaluated = 0;
};

/// Exhaustive minimum of the empirical risk of `model` over every precise
/// instantiation drawn from the grids of the imprecise inputs and outputs.
/// Crisp real-valued data only; throws InvalidArgument beyond the oracle
/// scale limits.
BruteForceResult brute_force_instantiation_risk(BaseLoss kind,
                                                const LinearModel& model,
                                                std::span<const Example> data,
                                                double grid_step);

}  // namespace fuzzyloss
