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

#include "fuzzyloss/normal.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fuzzyloss {
namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2 pi))

// Below this, erfc underflows and the asymptotic series takes over.
constexpr double kTailCutoff = -37.0;

}  // namespace

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x - kLogSqrt2Pi);
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double log_normal_cdf(double x) {
  if (x > kTailCutoff) return std::log(normal_cdf(x));
  // Mills ratio expansion: Phi(x) ~ phi(x)/|x| (1 - 1/x^2 + 3/x^4 - 15/x^6).
  const double z = 1.0 / (x * x);
  const double series = 1.0 - z * (1.0 - z * (3.0 - 15.0 * z));
  return -0.5 * x * x - kLogSqrt2Pi - std::log(-x) + std::log(series);
}

double log_normal_mass(double a, double b) {
  if (a >= b) return -std::numeric_limits<double>::infinity();
  // Work in the lower tail, where Phi has full relative accuracy.
  if (a > 0.0) {
    const double t = a;
    a = -b;
    b = -t;
  }
  if (b <= 0.0) {
    const double lb = log_normal_cdf(b);
    const double la = log_normal_cdf(a);
    return lb + std::log1p(-std::exp(la - lb));
  }
  // a <= 0 < b: both erf terms are nonnegative, so no cancellation; near
  // unit mass the complement is the accurate quantity.
  const double mass =
      0.5 * (std::erf(b / std::numbers::sqrt2) + std::erf(-a / std::numbers::sqrt2));
  if (mass < 0.5) return std::log(mass);
  return std::log1p(-normal_cdf(a) - normal_cdf(-b));
}

}  // namespace fuzzyloss
