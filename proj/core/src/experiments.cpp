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

#include "fuzzyloss/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "fuzzyloss/errors.hpp"
#include "fuzzyloss/normal.hpp"

namespace fuzzyloss {
namespace {

std::mt19937_64 make_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937_64(seq);
}

void check_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InvalidArgument("corruption probability must lie in [0, 1]");
  }
}

// One uniform draw per example; u < gamma corrupts, so masks are nested in
// gamma for a fixed seed.
std::vector<double> uniforms(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng = make_rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> out(n);
  for (double& v : out) v = u(rng);
  return out;
}

int label_sign(const Example& ex) {
  if (const auto* p = std::get_if<PreciseLabel>(&ex.output)) {
    return binary_sign(p->label);
  }
  throw InvalidArgument("corruption needs precisely labeled data");
}

LinearModel fit_or_zero(std::span<const Example> data, const LossSpec& loss,
                        const ExperimentConfig& cfg, std::uint64_t seed,
                        bool informative, const LinearModel* start) {
  const std::size_t dim = cfg.mu_plus.size();
  if (data.empty() || !informative) return LinearModel::zeros(dim);
  OptimizerConfig opt = cfg.optimizer;
  opt.seed = seed;
  if (start != nullptr) opt.warm_start = start->parameters();
  return fit(data, loss, cfg.risk, opt).model;
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  return kind == ExperimentKind::SemiSupervised ? "semi" : "noise";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Fuzzy: return "fuzzy";
    case Method::Gmli: return "gmli";
    case Method::Standard: return "standard";
  }
  return "fuzzy";
}

ExperimentKind parse_experiment_kind(std::string_view text) {
  if (text == "semi" || text == "semi-supervised") return ExperimentKind::SemiSupervised;
  if (text == "noise" || text == "label-noise") return ExperimentKind::LabelNoise;
  throw InvalidArgument("unknown experiment '" + std::string(text) +
                        "', expected semi or noise");
}

Method parse_method(std::string_view text) {
  if (text == "fuzzy") return Method::Fuzzy;
  if (text == "gmli") return Method::Gmli;
  if (text == "standard") return Method::Standard;
  throw InvalidArgument("unknown method '" + std::string(text) + "'");
}

OptimizerConfig ExperimentConfig::default_optimizer() {
  OptimizerConfig opt;
  opt.learning_rate = 1.0;
  opt.max_iters = 2000;
  opt.grad_tol = 1e-6;
  opt.restarts = 3;
  opt.init_scale = 1.0;
  return opt;
}

std::vector<double> ExperimentConfig::default_gamma_grid(ExperimentKind kind) {
  std::vector<double> grid;
  if (kind == ExperimentKind::SemiSupervised) {
    for (int k = 0; k <= 9; ++k) grid.push_back(k / 10.0);
  } else {
    for (int k = 0; k <= 9; ++k) grid.push_back(k * 5 / 100.0);
  }
  return grid;
}

void ExperimentConfig::validate() const {
  if (n_per_class == 0) throw InvalidArgument("n_per_class must be positive");
  if (mu_plus.empty() || mu_plus.size() != mu_minus.size()) {
    throw InvalidArgument("class means must be nonempty and of equal dimension");
  }
  if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
  for (double g : gamma_grid) {
    if (!(g >= 0.0 && g < 1.0)) throw InvalidArgument("gamma must lie in [0, 1)");
  }
  if (repetitions == 0) throw InvalidArgument("repetitions must be positive");
  if (methods.empty()) throw InvalidArgument("no method selected");
  optimizer.validate();
  risk.validate();
}

std::vector<Example> generate_sample(const ExperimentConfig& cfg,
                                     std::uint64_t seed) {
  cfg.validate();
  std::mt19937_64 rng = make_rng(seed);
  std::normal_distribution<double> noise(0.0, cfg.sigma);
  std::vector<Example> out;
  out.reserve(2 * cfg.n_per_class);
  for (int sign : {1, -1}) {
    const auto& mu = sign > 0 ? cfg.mu_plus : cfg.mu_minus;
    for (std::size_t i = 0; i < cfg.n_per_class; ++i) {
      std::vector<double> x(mu.size());
      for (std::size_t j = 0; j < mu.size(); ++j) x[j] = mu[j] + noise(rng);
      out.push_back(make_example(std::move(x), PreciseLabel{binary_label(sign)}));
    }
  }
  return out;
}

std::vector<Example> mask_labels(std::span<const Example> data, double gamma,
                                 std::uint64_t seed) {
  check_gamma(gamma);
  const std::vector<double> u = uniforms(data.size(), seed);
  const FuzzyLabel unknown = FuzzyLabel::vacuous({kPositiveLabel, kNegativeLabel});
  std::vector<Example> out(data.begin(), data.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    label_sign(out[i]);
    if (u[i] < gamma) out[i].output = unknown;
  }
  return out;
}

NoisySample flip_labels(std::span<const Example> data, double gamma,
                        std::uint64_t seed) {
  check_gamma(gamma);
  const std::vector<double> u = uniforms(data.size(), seed);
  NoisySample out;
  out.data.assign(data.begin(), data.end());
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    const int truth = label_sign(out.data[i]);
    const int observed = u[i] < gamma ? -truth : truth;
    out.truth.push_back(truth);
    out.observed.push_back(observed);
    if (gamma == 0.0) {
      out.data[i].output = PreciseLabel{binary_label(observed)};
    } else {
      out.data[i].output = FuzzyLabel::discounted(
          binary_label(observed), binary_label(-observed), 1.0 - gamma);
    }
  }
  return out;
}

double exact_error_rate(const LinearModel& model, const ExperimentConfig& cfg) {
  if (model.dimension() != cfg.mu_plus.size()) {
    throw InvalidArgument("model dimension does not match the class means");
  }
  const double norm = std::sqrt(squared_norm(model));
  if (norm == 0.0) return 0.5;
  // The score of a class sample is Gaussian with mean w.mu + b and standard
  // deviation sigma |w|.
  const double spread = cfg.sigma * norm;
  const double s_plus = predict_score(model, cfg.mu_plus);
  const double s_minus = predict_score(model, cfg.mu_minus);
  return 0.5 * normal_cdf(-s_plus / spread) + 0.5 * normal_cdf(s_minus / spread);
}

double bayes_error(const ExperimentConfig& cfg) {
  double dist2 = 0.0;
  for (std::size_t j = 0; j < cfg.mu_plus.size(); ++j) {
    const double d = cfg.mu_plus[j] - cfg.mu_minus[j];
    dist2 += d * d;
  }
  return normal_cdf(-0.5 * std::sqrt(dist2) / cfg.sigma);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t repetition,
                          std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(repetition),
                    static_cast<std::uint32_t>(repetition >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<CurvePoint> ExperimentResults::curve() const {
  std::vector<CurvePoint> out;
  for (std::size_t g = 0; g < gammas.size(); ++g) {
    for (std::size_t m = 0; m < methods.size(); ++m) {
      const auto& reps = outcomes[g][m];
      const double n = static_cast<double>(reps.size());
      double mean = 0.0;
      for (const auto& r : reps) mean += r.error;
      mean /= n;
      double ss = 0.0;
      for (const auto& r : reps) ss += (r.error - mean) * (r.error - mean);
      const double se = reps.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
      out.push_back({gammas[g], methods[m], mean, se, reps.size()});
    }
  }
  return out;
}

ExperimentResults run_experiment_detailed(ExperimentKind kind,
                                          const ExperimentConfig& cfg_in) {
  ExperimentConfig cfg = cfg_in;
  if (cfg.gamma_grid.empty()) cfg.gamma_grid = ExperimentConfig::default_gamma_grid(kind);
  cfg.validate();

  ExperimentResults res;
  res.kind = kind;
  res.gammas = cfg.gamma_grid;
  res.methods = cfg.methods;
  res.outcomes.assign(
      res.gammas.size(),
      std::vector<std::vector<RepetitionOutcome>>(
          res.methods.size(), std::vector<RepetitionOutcome>(cfg.repetitions)));

  const LossSpec fuzzy_loss_spec{LossKind::Logistic, LossMode::FuzzyIntegral, {}};
  const LossSpec gmli_loss_spec{LossKind::Logistic, LossMode::Gmli, {}};

  auto run_rep = [&](std::size_t rep) {
    const std::vector<Example> sample = generate_sample(cfg, derive_seed(cfg.seed, rep, 0));
    const std::uint64_t corrupt_seed = derive_seed(cfg.seed, rep, 1);
    const std::uint64_t fit_seed = derive_seed(cfg.seed, rep, 2);
    const std::uint64_t pilot_seed = derive_seed(cfg.seed, rep, 3);
    for (std::size_t g = 0; g < res.gammas.size(); ++g) {
      const double gamma = res.gammas[g];
      std::vector<Example> corrupted;
      std::vector<Example> standard;
      if (kind == ExperimentKind::SemiSupervised) {
        corrupted = mask_labels(sample, gamma, corrupt_seed);
        for (const auto& ex : corrupted) {
          if (std::holds_alternative<PreciseLabel>(ex.output)) standard.push_back(ex);
        }
      } else {
        NoisySample noisy = flip_labels(sample, gamma, corrupt_seed);
        corrupted = std::move(noisy.data);
        standard = corrupted;
        for (std::size_t i = 0; i < standard.size(); ++i) {
          standard[i].output = PreciseLabel{binary_label(noisy.observed[i])};
        }
      }
      const bool labeled = !standard.empty();
      // Every method starts its first restart from a pilot logistic fit on
      // the labeled (observed) data; the other restarts are random.
      const LinearModel pilot = fit_or_zero(standard, fuzzy_loss_spec, cfg,
                                            pilot_seed, labeled, nullptr);
      const LinearModel* start = cfg.warm_start ? &pilot : nullptr;
      for (std::size_t m = 0; m < res.methods.size(); ++m) {
        LinearModel model;
        switch (res.methods[m]) {
          case Method::Fuzzy:
            model = fit_or_zero(corrupted, fuzzy_loss_spec, cfg, fit_seed, true, start);
            break;
          case Method::Gmli:
            model = fit_or_zero(corrupted, gmli_loss_spec, cfg, fit_seed, labeled, start);
            break;
          case Method::Standard:
            model = fit_or_zero(standard, fuzzy_loss_spec, cfg, fit_seed, labeled, start);
            break;
        }
        res.outcomes[g][m][rep] = {exact_error_rate(model, cfg), std::move(model)};
      }
    }
  };

  std::size_t workers = cfg.threads != 0 ? cfg.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, cfg.repetitions);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t rep = next++; rep < cfg.repetitions; rep = next++) {
      try {
        run_rep(rep);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cfg.repetitions;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return res;
}

std::vector<CurvePoint> run_experiment(ExperimentKind kind,
                                       const ExperimentConfig& cfg) {
  return run_experiment_detailed(kind, cfg).curve();
}

void write_curve_csv(std::ostream& out, std::span<const CurvePoint> curve) {
  const auto old_precision = out.precision(10);
  out << "gamma,method,mean_error,stderr,repetitions\n";
  for (const auto& p : curve) {
    out << p.gamma << ',' << to_string(p.method) << ',' << p.mean_error << ','
        << p.std_error << ',' << p.repetitions << '\n';
  }
  out.precision(old_precision);
}

}  // namespace fuzzyloss
