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

// Synthetic two-Gaussian classification experiments with missing or noisy
// labels: data generation, label corruption, the three learners and exact
// error rates.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "fuzzyloss/fuzzy_sets.hpp"
#include "fuzzyloss/models.hpp"
#include "fuzzyloss/optimize.hpp"
#include "fuzzyloss/risk.hpp"

namespace fuzzyloss {

enum class ExperimentKind { SemiSupervised, LabelNoise };
enum class Method { Fuzzy, Gmli, Standard };

std::string_view to_string(ExperimentKind kind);
std::string_view to_string(Method method);
/// "semi" / "noise" (long names accepted). Throws InvalidArgument.
ExperimentKind parse_experiment_kind(std::string_view text);
/// "fuzzy" / "gmli" / "standard". Throws InvalidArgument.
Method parse_method(std::string_view text);

struct ExperimentConfig {
  std::size_t n_per_class = 100;
  std::vector<double> mu_plus{1.0, 1.0};
  std::vector<double> mu_minus{-1.0, -1.0};
  /// Per-coordinate standard deviation; the covariance is sigma^2 I.
  double sigma = 1.0;
  /// Empty selects the default grid of the experiment.
  std::vector<double> gamma_grid;
  std::size_t repetitions = 200;
  std::uint64_t seed = 0;
  std::vector<Method> methods{Method::Fuzzy, Method::Gmli, Method::Standard};
  OptimizerConfig optimizer = default_optimizer();
  RiskConfig risk;
  /// Start the first restart of every method from a logistic fit on the
  /// labeled (observed) examples.
  bool warm_start = true;
  /// Worker threads; 0 uses the hardware concurrency.
  std::size_t threads = 0;

  /// Gradient descent settings used by the experiments.
  static OptimizerConfig default_optimizer();
  static std::vector<double> default_gamma_grid(ExperimentKind kind);

  void validate() const;
};

struct CurvePoint {
  double gamma = 0.0;
  Method method = Method::Fuzzy;
  double mean_error = 0.0;
  double std_error = 0.0;
  std::size_t repetitions = 0;
};

/// n_per_class draws from each class Gaussian (positives first), precise
/// labels. Deterministic per seed.
std::vector<Example> generate_sample(const ExperimentConfig& cfg,
                                     std::uint64_t seed);

/// Each example independently becomes fully ambiguous with probability
/// gamma. The same seed yields nested masks for increasing gamma.
std::vector<Example> mask_labels(std::span<const Example> data, double gamma,
                                 std::uint64_t seed);

struct NoisySample {
  std::vector<Example> data;   // discounted observed labels
  std::vector<int> truth;      // true signs, for scoring only
  std::vector<int> observed;   // observed signs
};

/// Flips each label with probability gamma and discounts it: degree 1 on
/// the observed label, gamma on the other one. Precise labels at gamma = 0.
NoisySample flip_labels(std::span<const Example> data, double gamma,
                        std::uint64_t seed);

/// Misclassification probability of a linear classifier under the class
/// Gaussians with equal priors; 0.5 for a zero weight vector.
double exact_error_rate(const LinearModel& model, const ExperimentConfig& cfg);

/// Bayes error of the configuration.
double bayes_error(const ExperimentConfig& cfg);

struct RepetitionOutcome {
  double error = 0.0;
  LinearModel model;
};

struct ExperimentResults {
  ExperimentKind kind = ExperimentKind::SemiSupervised;
  std::vector<double> gammas;
  std::vector<Method> methods;
  /// outcomes[g][m][r] for gamma g, method m, repetition r.
  std::vector<std::vector<std::vector<RepetitionOutcome>>> outcomes;

  std::vector<CurvePoint> curve() const;
};

/// Seed of one repetition and stream, derived from the base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t repetition,
                          std::uint64_t stream);

ExperimentResults run_experiment_detailed(ExperimentKind kind,
                                          const ExperimentConfig& cfg);
std::vector<CurvePoint> run_experiment(ExperimentKind kind,
                                       const ExperimentConfig& cfg);

/// CSV with header gamma,method,mean_error,stderr,repetitions.
void write_curve_csv(std::ostream& out, std::span<const CurvePoint> curve);

}  // namespace fuzzyloss
