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

#include "fuzzyloss/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzyloss/errors.hpp"

namespace fuzzyloss {
namespace {

void check_dimension(const LinearModel& model, std::size_t n) {
  if (model.dimension() != n) {
    std::ostringstream msg;
    msg << "dimension mismatch: model has " << model.dimension()
        << " weights, input has " << n << " coordinates";
    throw InvalidArgument(msg.str());
  }
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

int binary_sign(const Label& label) {
  if (label == "+1" || label == "1") return 1;
  if (label == "-1") return -1;
  throw TypeMismatch("label '" + label + "' is not a binary label (+1/-1)");
}

const Label& binary_label(int sign) {
  if (sign == 1) return kPositiveLabel;
  if (sign == -1) return kNegativeLabel;
  throw InvalidArgument("binary label sign must be +1 or -1");
}

LinearModel::LinearModel(std::vector<double> weights, double bias)
    : weights_(std::move(weights)), bias_(bias) {
  const bool finite =
      std::isfinite(bias_) &&
      std::all_of(weights_.begin(), weights_.end(),
                  [](double w) { return std::isfinite(w); });
  if (!finite) throw InvalidArgument("linear model has non-finite entries");
}

std::vector<double> LinearModel::parameters() const {
  std::vector<double> p(weights_);
  p.push_back(bias_);
  return p;
}

LinearModel LinearModel::from_parameters(std::span<const double> params) {
  if (params.empty()) {
    throw InvalidArgument("parameter vector needs at least the bias");
  }
  return LinearModel(std::vector<double>(params.begin(), params.end() - 1),
                     params.back());
}

double predict_score(const LinearModel& model, std::span<const double> x) {
  check_dimension(model, x.size());
  double s = model.bias();
  for (std::size_t j = 0; j < x.size(); ++j) s += model.weights()[j] * x[j];
  return s;
}

int classify(const LinearModel& model, std::span<const double> x) {
  return predict_score(model, x) >= 0.0 ? 1 : -1;
}

Interval score_interval(const LinearModel& model,
                        std::span<const Interval> box) {
  check_dimension(model, box.size());
  double center = model.bias();
  double radius = 0.0;
  for (std::size_t j = 0; j < box.size(); ++j) {
    const double w = model.weights()[j];
    center += w * box[j].mid();
    radius += std::abs(w) * box[j].radius();
  }
  return Interval(center - radius, center + radius);
}

std::vector<double> point_with_score(const LinearModel& model,
                                     std::span<const Interval> box,
                                     double target) {
  const Interval range = score_interval(model, box);
  std::vector<double> x(box.size());
  // Vertices are returned exactly so that extreme selections stay in the box.
  if (target >= range.hi() || target <= range.lo()) {
    const double dir = target >= range.hi() ? 1.0 : -1.0;
    for (std::size_t j = 0; j < box.size(); ++j) {
      const double s = sign(model.weights()[j]) * dir;
      x[j] = s > 0.0 ? box[j].hi() : (s < 0.0 ? box[j].lo() : box[j].mid());
    }
    return x;
  }
  const double radius = range.radius();
  const double center = range.mid();
  const double t = radius > 0.0 ? (target - center) / radius : 0.0;
  for (std::size_t j = 0; j < box.size(); ++j) {
    x[j] = box[j].clamp(box[j].mid() +
                        t * sign(model.weights()[j]) * box[j].radius());
  }
  return x;
}

double squared_norm(const LinearModel& model) {
  double s = 0.0;
  for (double w : model.weights()) s += w * w;
  return s;
}

}  // namespace fuzzyloss
