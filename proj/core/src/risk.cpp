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

#include "fuzzyloss/risk.hpp"

#include <sstream>

#include "fuzzyloss/errors.hpp"
#include "fuzzyloss/objective.hpp"

namespace fuzzyloss {
namespace {

bool is_precise(const Example& ex) {
  if (!has_precise_inputs(ex)) return false;
  if (is_label_valued(ex.output)) {
    return std::get<LabelSet>(support_cut(ex.output)).size() == 1;
  }
  return as_trapezoid(ex.output).is_point();
}

void check_nonempty(std::span<const Example> data) {
  if (data.empty()) throw InvalidArgument("empty dataset");
}

}  // namespace

void RiskConfig::validate() const {
  if (alpha_levels == 0) throw InvalidArgument("alpha grid needs at least one level");
  if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be nonnegative");
}

double penalty(const LinearModel& model, const RiskConfig& cfg) {
  if (cfg.complexity == Complexity::None || cfg.lambda == 0.0) return 0.0;
  return cfg.lambda * squared_norm(model);
}

double empirical_risk(const LinearModel& model, std::span<const Example> data,
                      LossKind kind, const RiskConfig& cfg) {
  check_nonempty(data);
  for (const auto& ex : data) {
    if (!is_precise(ex)) {
      throw InvalidArgument("empirical risk needs precise data");
    }
  }
  return RiskObjective(data, {kind, LossMode::SetMin, {}}, cfg).value(model);
}

GeneralizedRisk generalized_empirical_risk(const LinearModel& model,
                                           std::span<const Example> data,
                                           LossKind kind, const RiskConfig& cfg) {
  check_nonempty(data);
  GeneralizedRisk out;
  out.risk = RiskObjective(data, {kind, LossMode::SetMin, {}}, cfg).value(model);
  out.selections.reserve(data.size());
  for (const auto& ex : data) out.selections.push_back(disambiguate(kind, model, ex));
  return out;
}

RiskFunction::RiskFunction(std::vector<double> alphas, std::vector<double> values)
    : alphas_(std::move(alphas)), values_(std::move(values)) {
  if (alphas_.empty() || alphas_.size() != values_.size()) {
    throw InvalidArgument("risk function needs one value per level");
  }
  for (std::size_t k = 0; k < alphas_.size(); ++k) {
    if (!(alphas_[k] > 0.0 && alphas_[k] <= 1.0) ||
        (k > 0 && !(alphas_[k] > alphas_[k - 1]))) {
      throw InvalidArgument("risk function levels must increase inside (0, 1]");
    }
    if (k > 0 && values_[k] < values_[k - 1]) {
      std::ostringstream msg;
      msg << "risk function decreases at level " << alphas_[k];
      throw InvalidArgument(msg.str());
    }
  }
}

double RiskFunction::integral() const {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum / static_cast<double>(values_.size());
}

RiskFunction risk_function(const LinearModel& model,
                           std::span<const Example> data, LossKind kind,
                           const RiskConfig& cfg, bool keep_selections) {
  cfg.validate();
  check_nonempty(data);
  const AlphaGrid grid = cfg.grid();
  const double n = static_cast<double>(data.size());
  const double pen = penalty(model, cfg);
  std::vector<double> values;
  std::vector<std::vector<Selection>> selections;
  values.reserve(grid.size());
  for (double alpha : grid.levels()) {
    double sum = 0.0;
    std::vector<Selection> level;
    for (const auto& ex : data) {
      const std::vector<Interval> box = input_box(ex, alpha);
      const Cut cut = alpha_cut(ex.output, alpha);
      sum += set_loss_xy(kind, model, box, cut);
      if (keep_selections) level.push_back(disambiguate(kind, model, box, cut));
    }
    values.push_back(sum / n + pen);
    if (keep_selections) selections.push_back(std::move(level));
  }
  RiskFunction rf(grid.levels(), std::move(values));
  rf.selections = std::move(selections);
  return rf;
}

Dominance dominates(const RiskFunction& a, const RiskFunction& b, double tol) {
  if (a.alphas() != b.alphas()) {
    throw InvalidArgument("risk functions sampled on different level grids");
  }
  bool a_le = true;
  bool b_le = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double va = a.values()[k];
    const double vb = b.values()[k];
    a_le = a_le && va <= vb + tol;
    b_le = b_le && vb <= va + tol;
  }
  if (a_le && b_le) return Dominance::Equal;
  if (a_le) return Dominance::FirstDominates;
  if (b_le) return Dominance::SecondDominates;
  return Dominance::Incomparable;
}

std::vector<std::size_t> pareto_front(std::span<const RiskFunction> candidates,
                                      double tol) {
  if (candidates.empty()) throw InvalidArgument("empty candidate list");
  std::vector<std::size_t> front;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      dominated = j != i && dominates(candidates[j], candidates[i], tol) ==
                                Dominance::FirstDominates;
    }
    if (!dominated) front.push_back(i);
  }
  return front;
}

std::vector<std::size_t> pareto_front(std::span<const LinearModel> candidates,
                                      std::span<const Example> data,
                                      LossKind kind, const RiskConfig& cfg) {
  if (candidates.empty()) throw InvalidArgument("empty candidate list");
  std::vector<RiskFunction> rfs;
  rfs.reserve(candidates.size());
  for (const auto& m : candidates) rfs.push_back(risk_function(m, data, kind, cfg));
  return pareto_front(rfs);
}

double aggregated_risk(const LinearModel& model, std::span<const Example> data,
                       LossKind kind, const RiskConfig& cfg) {
  check_nonempty(data);
  return RiskObjective(data, {kind, LossMode::FuzzyIntegral, {}}, cfg).value(model);
}

double gmli_risk(const LinearModel& model, std::span<const Example> data,
                 const LossSpec& loss, const RiskConfig& cfg) {
  check_nonempty(data);
  LossSpec spec = loss;
  spec.mode = LossMode::Gmli;
  return RiskObjective(data, spec, cfg).value(model);
}

double risk(const LinearModel& model, std::span<const Example> data,
            const LossSpec& loss, const RiskConfig& cfg) {
  check_nonempty(data);
  return RiskObjective(data, loss, cfg).value(model);
}

}  // namespace fuzzyloss
