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

// JSON and JSON-lines formats for data, models, selections and experiment
// configurations.
//
// One example per line:
//   {"x": [0.5, {"lo": 0, "hi": 1}, {"trap": [0, 1, 2, 3]}], "y": <datum>}
// where <datum> is one of
//   1.5 | {"real": 1.5} | {"interval": [lo, hi]} | {"trap": [a, b, c, d]}
//   "+1" | {"label": "+1"} | {"flabel": {"+1": 1, "-1": 0.3}}

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyloss/disambiguate.hpp"
#include "fuzzyloss/experiments.hpp"
#include "fuzzyloss/fuzzy_sets.hpp"
#include "fuzzyloss/models.hpp"

namespace fuzzyloss {

// All parsers throw ParseError on malformed text.

FuzzyDatum parse_datum(std::string_view json);
std::string datum_to_json(const FuzzyDatum& datum);

Example parse_example(std::string_view json);
std::string example_to_json(const Example& example);

/// Reads JSON lines; blank lines are skipped.
std::vector<Example> read_examples(std::istream& in);
std::vector<Example> load_examples(const std::string& path);
void write_examples(std::ostream& out, std::span<const Example> data);

LinearModel parse_model(std::string_view json);
std::string model_to_json(const LinearModel& model);
LinearModel load_model(const std::string& path);
void save_model(const std::string& path, const LinearModel& model);

/// {"index": i, "alpha": a, "x": [...], "y": v, "score": s, "loss": l}
std::string selection_to_json(const Selection& selection, std::size_t index,
                              double alpha);

/// Keys (all optional): n_per_class, mu_plus, mu_minus, sigma, gamma_grid,
/// repetitions, seed, methods, threads, warm_start, alpha_levels, and an
/// "optimizer" object with learning_rate, max_iters, grad_tol, restarts,
/// init_scale.
ExperimentConfig parse_experiment_config(std::string_view json);
ExperimentConfig load_experiment_config(const std::string& path);

}  // namespace fuzzyloss
