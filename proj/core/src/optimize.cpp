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

#include "fuzzyloss/optimize.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "fuzzyloss/objective.hpp"

namespace fuzzyloss {
namespace {

std::string non_finite_message(std::size_t restart, std::size_t iteration) {
  std::ostringstream msg;
  msg << "non-finite risk or gradient at restart " << restart << ", iteration "
      << iteration;
  return msg.str();
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

FitResult least_squares(const RiskObjective& obj) {
  const std::size_t d = obj.dimension();
  const std::size_t n = obj.ls_targets().size();
  const RiskConfig& cfg = obj.config();
  const bool ridge = cfg.complexity == Complexity::SquaredNorm && cfg.lambda > 0.0;
  const std::size_t rows = n + (ridge ? d : 0);

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows),
                                            static_cast<Eigen::Index>(d + 1));
  Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows));
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    for (std::size_t j = 0; j < d; ++j) {
      a(r, static_cast<Eigen::Index>(j)) = obj.ls_inputs()[i * d + j];
    }
    a(r, static_cast<Eigen::Index>(d)) = 1.0;
    y(r) = obj.ls_targets()[i];
  }
  if (ridge) {
    // (1/n)|Ap - y|^2 + lambda |w|^2 as one stacked least-squares problem.
    const double s = std::sqrt(static_cast<double>(n) * cfg.lambda);
    for (std::size_t j = 0; j < d; ++j) {
      a(static_cast<Eigen::Index>(n + j), static_cast<Eigen::Index>(j)) = s;
    }
  }
  const Eigen::VectorXd p = a.colPivHouseholderQr().solve(y);
  std::vector<double> params(p.data(), p.data() + p.size());
  if (!all_finite(params)) throw NonFiniteGradient(params, 0, 0);

  FitResult out;
  out.model = LinearModel::from_parameters(params);
  out.risk = obj.value(params);
  out.diagnostics.least_squares = true;
  return out;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0)) throw InvalidArgument("learning rate must be positive");
  if (max_iters == 0) throw InvalidArgument("max_iters must be positive");
  if (!(grad_tol > 0.0)) throw InvalidArgument("grad_tol must be positive");
  if (restarts == 0) throw InvalidArgument("restarts must be positive");
  if (!(init_scale >= 0.0)) throw InvalidArgument("init_scale must be nonnegative");
}

NonFiniteGradient::NonFiniteGradient(std::vector<double> iterate,
                                     std::size_t restart, std::size_t iteration)
    : Error(non_finite_message(restart, iteration)),
      iterate_(std::move(iterate)),
      restart_(restart),
      iteration_(iteration) {}

std::vector<double> initial_parameters(std::size_t num_parameters,
                                       const OptimizerConfig& opt,
                                       std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed),
                    static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> u(-opt.init_scale, opt.init_scale);
  std::vector<double> p(num_parameters, 0.0);
  if (opt.init_scale > 0.0) {
    for (double& v : p) v = u(rng);
  }
  return p;
}

FitResult fit(std::span<const Example> data, const LossSpec& loss,
              const RiskConfig& risk_cfg, const OptimizerConfig& opt) {
  opt.validate();
  const RiskObjective obj(data, loss, risk_cfg);
  if (opt.least_squares_shortcut && obj.is_least_squares()) {
    return least_squares(obj);
  }

  const std::size_t n = obj.num_parameters();
  if (!opt.warm_start.empty() && opt.warm_start.size() != n) {
    throw InvalidArgument("warm start has the wrong number of parameters");
  }
  std::vector<double> grad(n);
  std::vector<double> best_params;
  double best = std::numeric_limits<double>::infinity();
  FitResult out;

  for (std::size_t r = 0; r < opt.restarts; ++r) {
    std::vector<double> p = r == 0 && !opt.warm_start.empty()
                                ? opt.warm_start
                                : initial_parameters(n, opt, r);
    RestartTrace trace;
    trace.best_risk = std::numeric_limits<double>::infinity();
    for (std::size_t it = 0;; ++it) {
      const double v = obj.value_and_gradient(p, grad);
      if (!std::isfinite(v) || !all_finite(grad)) throw NonFiniteGradient(p, r, it);
      if (it == 0) trace.initial_risk = v;
      trace.final_risk = v;
      trace.iterations = it;
      trace.best_risk = std::min(trace.best_risk, v);
      if (v < best) {
        best = v;
        best_params = p;
        out.diagnostics.best_restart = r;
      }
      double norm2 = 0.0;
      for (double g : grad) norm2 += g * g;
      if (std::sqrt(norm2) <= opt.grad_tol) {
        trace.converged = true;
        break;
      }
      if (it == opt.max_iters) break;
      for (std::size_t j = 0; j < n; ++j) p[j] -= opt.learning_rate * grad[j];
    }
    out.diagnostics.restarts.push_back(trace);
  }

  out.model = LinearModel::from_parameters(best_params);
  out.risk = best;
  return out;
}

double gradient_check(const LossSpec& loss, const LinearModel& model,
                      std::span<const Example> data, const RiskConfig& risk_cfg,
                      double h) {
  if (!(h > 0.0)) throw InvalidArgument("finite-difference step must be positive");
  const RiskObjective obj(data, loss, risk_cfg);
  std::vector<double> p = model.parameters();
  if (p.size() != obj.num_parameters()) {
    throw InvalidArgument("model dimension does not match the data");
  }
  std::vector<double> analytic(p.size());
  obj.value_and_gradient(p, analytic);

  double max_dev = 0.0;
  double max_fd = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double orig = p[j];
    p[j] = orig + h;
    const double up = obj.value(p);
    p[j] = orig - h;
    const double down = obj.value(p);
    p[j] = orig;
    const double fd = (up - down) / (2.0 * h);
    max_dev = std::max(max_dev, std::abs(analytic[j] - fd));
    max_fd = std::max(max_fd, std::abs(fd));
  }
  return max_dev / std::max(max_fd, 1e-8);
}

}  // namespace fuzzyloss
