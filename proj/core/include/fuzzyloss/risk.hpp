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

// Empirical, generalized, level-wise and aggregated risks of a model on
// (imprecise) data, and the Pareto order on risk functions.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzyloss/disambiguate.hpp"
#include "fuzzyloss/fuzzy_sets.hpp"
#include "fuzzyloss/loss_spec.hpp"
#include "fuzzyloss/losses.hpp"
#include "fuzzyloss/models.hpp"

namespace fuzzyloss {

enum class Complexity { None, SquaredNorm };

struct RiskConfig {
  std::size_t alpha_levels = AlphaGrid::kDefaultLevels;
  double lambda = 0.0;
  Complexity complexity = Complexity::None;
  /// Auto integrates fuzzy outputs in closed form where available; the
  /// level grid is used otherwise and for fuzzy inputs.
  LevelIntegration integration = LevelIntegration::Auto;

  /// Throws InvalidArgument unless alpha_levels >= 1 and lambda >= 0.
  void validate() const;
  AlphaGrid grid() const { return AlphaGrid(alpha_levels); }
};

/// lambda * C(M); C is the squared norm of the weights (bias excluded).
double penalty(const LinearModel& model, const RiskConfig& cfg);

/// Mean loss on precise data, plus the penalty.
double empirical_risk(const LinearModel& model, std::span<const Example> data,
                      LossKind kind, const RiskConfig& cfg = {});

struct GeneralizedRisk {
  double risk = 0.0;
  std::vector<Selection> selections;
};

/// Mean set loss on crisp set-valued data, plus the penalty, together with
/// the disambiguation of every example.
GeneralizedRisk generalized_empirical_risk(const LinearModel& model,
                                           std::span<const Example> data,
                                           LossKind kind,
                                           const RiskConfig& cfg = {});

/// Sampled map alpha -> risk, non-decreasing in alpha.
class RiskFunction {
 public:
  /// Throws InvalidArgument unless the sizes agree, the levels increase
  /// strictly inside (0, 1] and the values do not decrease.
  RiskFunction(std::vector<double> alphas, std::vector<double> values);

  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return alphas_.size(); }
  /// Midpoint-rule integral over (0, 1] (the mean of the values).
  double integral() const;

  /// Per level, the selections behind each value (empty unless requested).
  std::vector<std::vector<Selection>> selections;

 private:
  std::vector<double> alphas_;
  std::vector<double> values_;
};

/// Level-wise generalized risk on the cuts of fuzzy data.
RiskFunction risk_function(const LinearModel& model,
                           std::span<const Example> data, LossKind kind,
                           const RiskConfig& cfg = {},
                           bool keep_selections = false);

enum class Dominance { Equal, FirstDominates, SecondDominates, Incomparable };

inline constexpr double kDominanceTolerance = 1e-9;

/// Pointwise comparison; lower risk is better. Throws InvalidArgument when
/// the level grids differ.
Dominance dominates(const RiskFunction& a, const RiskFunction& b,
                    double tol = kDominanceTolerance);

/// Indices of the non-dominated risk functions. Throws on an empty list.
std::vector<std::size_t> pareto_front(std::span<const RiskFunction> candidates,
                                      double tol = kDominanceTolerance);
std::vector<std::size_t> pareto_front(std::span<const LinearModel> candidates,
                                      std::span<const Example> data,
                                      LossKind kind, const RiskConfig& cfg = {});

/// Integral of the risk function over the levels, plus the penalty. With
/// precise (or crisp) inputs it is the mean fuzzy loss.
double aggregated_risk(const LinearModel& model, std::span<const Example> data,
                       LossKind kind, const RiskConfig& cfg = {});

/// Mean negative log-likelihood over the informative examples (vacuous
/// labels are skipped), plus the penalty.
double gmli_risk(const LinearModel& model, std::span<const Example> data,
                 const LossSpec& loss, const RiskConfig& cfg = {});

/// Risk selected by the loss mode.
double risk(const LinearModel& model, std::span<const Example> data,
            const LossSpec& loss, const RiskConfig& cfg = {});

}  // namespace fuzzyloss
