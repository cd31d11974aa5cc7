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

#include "fuzzyloss/dataset.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fuzzyloss/errors.hpp"
#include "overloaded.hpp"

namespace fuzzyloss {
namespace {

using nlohmann::json;
using detail::Overloaded;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> numbers(const json& j, const char* what, std::size_t n) {
  if (!j.is_array() || (n != 0 && j.size() != n)) {
    std::ostringstream msg;
    msg << what << " must be an array";
    if (n != 0) msg << " of " << n << " numbers";
    throw ParseError(msg.str());
  }
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

Label label(const json& j) {
  if (!j.is_string()) throw ParseError("label must be a string");
  return j.get<std::string>();
}

FuzzyDatum datum_from(const json& j) {
  if (j.is_number()) return PreciseReal{j.get<double>()};
  if (j.is_string()) return PreciseLabel{j.get<std::string>()};
  if (!j.is_object() || j.size() != 1) {
    throw ParseError("datum must be a number, a string or a one-key object");
  }
  const auto& [key, v] = *j.items().begin();
  if (key == "real") return PreciseReal{number(v, "real")};
  if (key == "interval") {
    const auto p = numbers(v, "interval", 2);
    return Interval(p[0], p[1]);
  }
  if (key == "trap") {
    const auto p = numbers(v, "trap", 4);
    return Trapezoid(p[0], p[1], p[2], p[3]);
  }
  if (key == "label") return PreciseLabel{label(v)};
  if (key == "flabel") {
    if (!v.is_object()) throw ParseError("flabel must map labels to degrees");
    std::map<Label, double> m;
    for (const auto& [l, d] : v.items()) m.emplace(l, number(d, "membership degree"));
    return FuzzyLabel(std::move(m));
  }
  throw ParseError("unknown datum kind '" + key + "'");
}

json datum_json(const FuzzyDatum& d) {
  return std::visit(
      Overloaded{
          [](const PreciseReal& p) -> json { return p.value; },
          [](const Interval& iv) -> json {
            return {{"interval", {iv.lo(), iv.hi()}}};
          },
          [](const Trapezoid& t) -> json {
            return {{"trap", {t.a(), t.b(), t.c(), t.d()}}};
          },
          [](const FuzzyLabel& l) -> json {
            return {{"flabel", l.memberships()}};
          },
          [](const PreciseLabel& p) -> json { return {{"label", p.label}}; },
      },
      d);
}

Trapezoid coordinate_from(const json& j) {
  if (j.is_number()) return Trapezoid::point(j.get<double>());
  if (j.is_object() && j.contains("lo") && j.contains("hi") && j.size() == 2) {
    return Trapezoid::crisp(Interval(number(j["lo"], "lo"), number(j["hi"], "hi")));
  }
  if (j.is_object() && j.contains("trap") && j.size() == 1) {
    const auto p = numbers(j["trap"], "trap", 4);
    return Trapezoid(p[0], p[1], p[2], p[3]);
  }
  throw ParseError("input coordinate must be a number, {lo, hi} or {trap}");
}

json coordinate_json(const Trapezoid& t) {
  if (t.is_point()) return t.a();
  if (t.is_crisp()) return {{"lo", t.a()}, {"hi", t.d()}};
  return {{"trap", {t.a(), t.b(), t.c(), t.d()}}};
}

// Runs `fn`, turning library and JSON errors into ParseError.
template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

FuzzyDatum parse_datum(std::string_view text) {
  return guarded([&] { return datum_from(parse_json(text)); });
}

std::string datum_to_json(const FuzzyDatum& datum) { return datum_json(datum).dump(); }

Example parse_example(std::string_view text) {
  return guarded([&] {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
      throw ParseError("example needs \"x\" and \"y\"");
    }
    if (!j["x"].is_array()) throw ParseError("\"x\" must be an array");
    Example ex;
    for (const auto& c : j["x"]) ex.inputs.push_back(coordinate_from(c));
    ex.output = datum_from(j["y"]);
    return ex;
  });
}

std::string example_to_json(const Example& example) {
  json x = json::array();
  for (const auto& t : example.inputs) x.push_back(coordinate_json(t));
  return json{{"x", x}, {"y", datum_json(example.output)}}.dump();
}

std::vector<Example> read_examples(std::istream& in) {
  std::vector<Example> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_example(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Example> load_examples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_examples(in);
}

void write_examples(std::ostream& out, std::span<const Example> data) {
  for (const auto& ex : data) out << example_to_json(ex) << '\n';
}

LinearModel parse_model(std::string_view text) {
  return guarded([&] {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("weights") || !j.contains("bias")) {
      throw ParseError("model needs \"weights\" and \"bias\"");
    }
    return LinearModel(numbers(j["weights"], "weights", 0), number(j["bias"], "bias"));
  });
}

std::string model_to_json(const LinearModel& model) {
  return json{{"weights", model.weights()}, {"bias", model.bias()}}.dump();
}

LinearModel load_model(const std::string& path) { return parse_model(read_file(path)); }

void save_model(const std::string& path, const LinearModel& model) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << model_to_json(model) << '\n';
}

std::string selection_to_json(const Selection& sel, std::size_t index, double alpha) {
  json y = std::visit([](const auto& v) -> json { return v; }, sel.y);
  return json{{"index", index}, {"alpha", alpha}, {"x", sel.x},
              {"y", y},         {"score", sel.score}, {"loss", sel.loss}}
      .dump();
}

ExperimentConfig parse_experiment_config(std::string_view text) {
  return guarded([&] {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("experiment config must be an object");
    ExperimentConfig cfg;
    for (const auto& [key, v] : j.items()) {
      if (key == "n_per_class") {
        cfg.n_per_class = v.get<std::size_t>();
      } else if (key == "mu_plus") {
        cfg.mu_plus = numbers(v, "mu_plus", 0);
      } else if (key == "mu_minus") {
        cfg.mu_minus = numbers(v, "mu_minus", 0);
      } else if (key == "sigma") {
        cfg.sigma = number(v, "sigma");
      } else if (key == "gamma_grid") {
        cfg.gamma_grid = numbers(v, "gamma_grid", 0);
      } else if (key == "repetitions") {
        cfg.repetitions = v.get<std::size_t>();
      } else if (key == "seed") {
        cfg.seed = v.get<std::uint64_t>();
      } else if (key == "threads") {
        cfg.threads = v.get<std::size_t>();
      } else if (key == "warm_start") {
        cfg.warm_start = v.get<bool>();
      } else if (key == "alpha_levels") {
        cfg.risk.alpha_levels = v.get<std::size_t>();
      } else if (key == "methods") {
        cfg.methods.clear();
        for (const auto& m : v) cfg.methods.push_back(parse_method(m.get<std::string>()));
      } else if (key == "optimizer") {
        for (const auto& [ok, ov] : v.items()) {
          if (ok == "learning_rate") {
            cfg.optimizer.learning_rate = number(ov, ok.c_str());
          } else if (ok == "max_iters") {
            cfg.optimizer.max_iters = ov.get<std::size_t>();
          } else if (ok == "grad_tol") {
            cfg.optimizer.grad_tol = number(ov, ok.c_str());
          } else if (ok == "restarts") {
            cfg.optimizer.restarts = ov.get<std::size_t>();
          } else if (ok == "init_scale") {
            cfg.optimizer.init_scale = number(ov, ok.c_str());
          } else {
            throw ParseError("unknown optimizer key '" + ok + "'");
          }
        }
      } else {
        throw ParseError("unknown experiment config key '" + key + "'");
      }
    }
    cfg.validate();
    return cfg;
  });
}

ExperimentConfig load_experiment_config(const std::string& path) {
  return parse_experiment_config(read_file(path));
}

}  // namespace fuzzyloss
