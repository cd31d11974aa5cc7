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


#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "fuzzyloss/experiments.hpp"
#include "fuzzyloss/gmli.hpp"
#include "fuzzyloss/losses.hpp"
#include "fuzzyloss/optimize.hpp"
#include "fuzzyloss/risk.hpp"

namespace {

using namespace fuzzyloss;

void BM_FuzzyL1ClosedForm(benchmark::State& state) {
  const FuzzyDatum y = Trapezoid(1.0, 3.0, 4.0, 7.0);
  double yhat = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzy_loss(BaseLoss::L1, y, yhat));
    yhat += 1e-6;
  }
}
BENCHMARK(BM_FuzzyL1ClosedForm);

void BM_FuzzyL1Quadrature(benchmark::State& state) {
  const FuzzyDatum y = Trapezoid(1.0, 3.0, 4.0, 7.0);
  const AlphaGrid grid(static_cast<std::size_t>(state.range(0)));
  double yhat = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fuzzy_loss(BaseLoss::L1, y, yhat, grid, LevelIntegration::Quadrature));
    yhat += 1e-6;
  }
}
BENCHMARK(BM_FuzzyL1Quadrature)->Arg(101)->Arg(1001);

void BM_GmliInterval(benchmark::State& state) {
  const Interval y(3.0, 7.0);
  double yhat = -20.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmli_interval_loss(y, yhat));
    yhat = yhat > 20.0 ? -20.0 : yhat + 1e-3;
  }
}
BENCHMARK(BM_GmliInterval);

ExperimentConfig bench_config() {
  ExperimentConfig cfg;
  cfg.n_per_class = 100;
  return cfg;
}

std::vector<Example> noisy_sample(double gamma) {
  const ExperimentConfig cfg = bench_config();
  const auto clean = generate_sample(cfg, 1);
  return flip_labels(clean, gamma, 2).data;
}

void BM_FuzzyMarginRisk(benchmark::State& state) {
  const auto data = noisy_sample(0.3);
  const LinearModel m({1.0, 1.0}, -0.5);
  const LossSpec loss{LossKind::Logistic, LossMode::FuzzyIntegral, {}};
  for (auto _ : state) benchmark::DoNotOptimize(risk(m, data, loss));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}
BENCHMARK(BM_FuzzyMarginRisk);

void BM_FitLogistic(benchmark::State& state) {
  const auto data = noisy_sample(0.3);
  const LossSpec loss{LossKind::Logistic,
                      state.range(0) == 0 ? LossMode::FuzzyIntegral : LossMode::Gmli, {}};
  const OptimizerConfig opt = ExperimentConfig::default_optimizer();
  for (auto _ : state) benchmark::DoNotOptimize(fit(data, loss, {}, opt).risk);
}
BENCHMARK(BM_FitLogistic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GeneralizedRiskIntervals(benchmark::State& state) {
  std::vector<Example> data;
  for (int i = 0; i < state.range(0); ++i) {
    const double x = 0.01 * i;
    data.push_back(make_example({x, 1.0 - x}, Interval(x, x + 0.5)));
  }
  const LinearModel m({0.7, -0.2}, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generalized_empirical_risk(m, data, LossKind::L2).risk);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeneralizedRiskIntervals)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
