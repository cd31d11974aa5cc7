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

// Standard normal distribution helpers.

#pragma once

namespace fuzzyloss {

double normal_pdf(double x);
/// Phi(x) = erfc(-x / sqrt(2)) / 2; accurate in both tails.
double normal_cdf(double x);
/// log Phi(x), finite far into the lower tail.
double log_normal_cdf(double x);
/// log(Phi(b) - Phi(a)) for a <= b, without cancellation in the tails.
double log_normal_mass(double a, double b);

}  // namespace fuzzyloss
