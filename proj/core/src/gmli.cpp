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

#include "fuzzyloss/gmli.hpp"

#include <cmath>
#include <sstream>

#include "fuzzyloss/errors.hpp"
#include "fuzzyloss/losses.hpp"
#include "fuzzyloss/normal.hpp"

namespace fuzzyloss {
namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;

void check_width(const Interval& y, const GmliConfig& cfg) {
  cfg.validate();
  if (y.width() < cfg.min_width) {
    std::ostringstream msg;
    msg << "interval [" << y.lo() << ", " << y.hi() << "] narrower than "
        << cfg.min_width << ": GMLI loss degenerates to infinity";
    throw DegenerateInterval(msg.str());
  }
}

void check_confidence(double w) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw InvalidArgument("GMLI confidence must lie in [0, 1]");
  }
}

double log_pdf(double x) { return -0.5 * x * x - kLogSqrt2Pi; }

}  // namespace

void GmliConfig::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("GMLI sigma must be positive");
  }
  if (!(min_width > 0.0)) {
    throw InvalidArgument("GMLI min_width must be positive");
  }
}

double gmli_interval_loss(const Interval& y, double y_hat,
                          const GmliConfig& cfg) {
  check_width(y, cfg);
  const double a = (y.lo() - y_hat) / cfg.sigma;
  const double b = (y.hi() - y_hat) / cfg.sigma;
  return -log_normal_mass(a, b);
}

double gmli_interval_derivative(const Interval& y, double y_hat,
                                const GmliConfig& cfg) {
  check_width(y, cfg);
  const double a = (y.lo() - y_hat) / cfg.sigma;
  const double b = (y.hi() - y_hat) / cfg.sigma;
  const double log_mass = log_normal_mass(a, b);
  // d/dy_hat [-log m] = (phi(b) - phi(a)) / (sigma m)
  const double ratio_b = std::exp(log_pdf(b) - log_mass);
  const double ratio_a = std::exp(log_pdf(a) - log_mass);
  return (ratio_b - ratio_a) / cfg.sigma;
}

double normalized_gmli_interval_loss(const Interval& y, double y_hat,
                                     const GmliConfig& cfg) {
  return gmli_interval_loss(y, y_hat, cfg) -
         gmli_interval_loss(y, y.mid(), cfg);
}

double gmli_precise_loss(double y, double y_hat, const GmliConfig& cfg) {
  cfg.validate();
  const double z = (y_hat - y) / cfg.sigma;
  return 0.5 * z * z + std::log(cfg.sigma) + kLogSqrt2Pi;
}

double gmli_precise_derivative(double y, double y_hat, const GmliConfig& cfg) {
  cfg.validate();
  return (y_hat - y) / (cfg.sigma * cfg.sigma);
}

double gmli_logistic(double w, double t) {
  check_confidence(w);
  if (w == 0.0) return 0.0;
  if (w == 1.0) return margin(MarginLoss::Logistic, t);
  // 1 - w e^{-t}/(1+e^{-t}) = (1 - w + e^t)/(1 + e^t), so the loss is
  // log1p(w / (1 - w + e^t)); the denominator is at least 1 - w > 0.
  return std::log1p(w / (1.0 - w + std::exp(t)));
}

double gmli_logistic_derivative(double w, double t) {
  check_confidence(w);
  if (w == 0.0) return 0.0;
  if (w == 1.0) return margin_derivative(MarginLoss::Logistic, t);
  if (t > 0.0) {
    const double e = std::exp(-t);
    // -w e^t / ((1 - w + e^t)(1 + e^t)) rewritten with e^{-t}.
    return -w * e / (((1.0 - w) * e + 1.0) * (1.0 + e));
  }
  const double e = std::exp(t);
  return -w * e / ((1.0 - w + e) * (1.0 + e));
}

double gmli_logistic_loss(double w, int y, double s) {
  if (y != 1 && y != -1) throw InvalidArgument("label must be +1 or -1");
  return gmli_logistic(w, static_cast<double>(y) * s);
}

}  // namespace fuzzyloss
