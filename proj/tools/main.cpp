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

// fuzzyloss: command line front end.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzyloss/dataset.hpp"
#include "fuzzyloss/disambiguate.hpp"
#include "fuzzyloss/errors.hpp"
#include "fuzzyloss/experiments.hpp"
#include "fuzzyloss/gmli.hpp"
#include "fuzzyloss/loss_spec.hpp"
#include "fuzzyloss/losses.hpp"
#include "fuzzyloss/optimize.hpp"
#include "fuzzyloss/risk.hpp"

namespace fl = fuzzyloss;

namespace {

struct Range {
  double lo;
  double hi;
  double step;
};

Range parse_range(const std::string& text) {
  Range r{};
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> r.lo >> c1 >> r.hi >> c2 >> r.step) || c1 != ':' || c2 != ':' ||
      !(r.step > 0.0) || r.hi < r.lo) {
    throw fl::InvalidArgument("range must be lo:hi:step with step > 0");
  }
  return r;
}

// Output goes to a file when a path is given, to stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw fl::Error("cannot write '" + path + "'");
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct LossCurveArgs {
  std::string loss = "l2";
  std::string datum;
  std::string range = "-5:5:0.1";
  double shift = 0.0;
  double w = 1.0;
  int y = 1;
  bool normalized = false;
  double sigma = 1.0;
  std::size_t levels = fl::AlphaGrid::kDefaultLevels;
};

int run_loss_curve(const LossCurveArgs& a) {
  const Range r = parse_range(a.range);
  const fl::AlphaGrid grid(a.levels);
  fl::GmliConfig gcfg;
  gcfg.sigma = a.sigma;
  if (a.shift < 0.0) throw fl::InvalidArgument("shift must be nonnegative");

  const bool gmli_interval = a.loss == "gmli-interval";
  const bool gmli_logistic = a.loss == "gmli-logistic";
  std::optional<fl::FuzzyDatum> y;
  if (!a.datum.empty()) y = fl::parse_datum(a.datum);
  std::optional<fl::LossKind> kind;
  if (!gmli_interval && !gmli_logistic) kind = fl::parse_loss_kind(a.loss);
  if (!y && !gmli_logistic && !(kind && fl::is_margin(*kind))) {
    throw fl::InvalidArgument("--fuzzy is required for this loss");
  }
  const bool scores = gmli_logistic || !y || fl::is_label_valued(*y);

  std::printf("%s,loss\n", scores ? "score" : "yhat");
  const auto steps = static_cast<long>((r.hi - r.lo) / r.step + 1e-9);
  for (long k = 0; k <= steps; ++k) {
    const double s = r.lo + static_cast<double>(k) * r.step;
    double loss = 0.0;
    if (gmli_logistic) {
      loss = fl::gmli_logistic_loss(a.w, a.y, s);
    } else if (gmli_interval) {
      const fl::Trapezoid t = fl::as_trapezoid(*y);
      if (!t.is_crisp()) throw fl::IncompatibleLoss("likelihood loss needs an interval");
      if (t.is_point()) {
        loss = fl::gmli_precise_loss(t.b(), s, gcfg);
      } else if (a.normalized) {
        loss = fl::normalized_gmli_interval_loss(t.core(), s, gcfg);
      } else {
        loss = fl::gmli_interval_loss(t.core(), s, gcfg);
      }
    } else if (!y) {
      // Discounted label given by --w and --y; --shift widens the score.
      loss = fl::fuzzy_margin_loss(fl::as_margin(*kind), a.w, a.y, s);
      if (a.shift > 0.0) {
        loss = a.w * fl::shifted_margin_loss(fl::as_margin(*kind), a.y, s, a.shift) +
               (1.0 - a.w) * fl::shifted_margin_loss(fl::as_margin(*kind), 1,
                                                      std::abs(s), a.shift);
      }
    } else {
      loss = fl::fuzzy_range_loss(*kind, *y, fl::Interval(s - a.shift, s + a.shift), grid)
                 .value;
    }
    std::printf("%.10g,%.12g\n", s, loss);
  }
  return 0;
}

struct RiskArgs {
  std::string model;
  std::string data;
  std::string loss = "l2";
  std::size_t levels = fl::AlphaGrid::kDefaultLevels;
  double lambda = 0.0;
  bool quadrature = false;
};

fl::RiskConfig risk_config(std::size_t levels, double lambda, bool quadrature) {
  fl::RiskConfig cfg;
  cfg.alpha_levels = levels;
  cfg.lambda = lambda;
  cfg.complexity = lambda > 0.0 ? fl::Complexity::SquaredNorm : fl::Complexity::None;
  cfg.integration =
      quadrature ? fl::LevelIntegration::Quadrature : fl::LevelIntegration::Auto;
  return cfg;
}

int run_risk(const RiskArgs& a) {
  const fl::LinearModel model = fl::load_model(a.model);
  const std::vector<fl::Example> data = fl::load_examples(a.data);
  const fl::LossSpec spec = fl::parse_loss_spec(a.loss);
  const fl::RiskConfig cfg = risk_config(a.levels, a.lambda, a.quadrature);
  if (spec.mode == fl::LossMode::Gmli) {
    std::printf("gmli,%.12g\n", fl::gmli_risk(model, data, spec, cfg));
    return 0;
  }
  const fl::RiskFunction rf = fl::risk_function(model, data, spec.kind, cfg);
  std::printf("alpha,risk\n");
  for (std::size_t k = 0; k < rf.size(); ++k) {
    std::printf("%.10g,%.12g\n", rf.alphas()[k], rf.values()[k]);
  }
  std::printf("aggregated,%.12g\n", fl::risk(model, data, spec, cfg));
  return 0;
}

struct FitArgs {
  std::string data;
  std::string loss = "l2";
  std::string out;
  fl::OptimizerConfig opt;
  std::size_t levels = fl::AlphaGrid::kDefaultLevels;
  double lambda = 0.0;
};

int run_fit(const FitArgs& a) {
  const std::vector<fl::Example> data = fl::load_examples(a.data);
  const fl::LossSpec spec = fl::parse_loss_spec(a.loss);
  const fl::FitResult res =
      fl::fit(data, spec, risk_config(a.levels, a.lambda, false), a.opt);
  if (!a.out.empty()) fl::save_model(a.out, res.model);
  std::size_t converged = 0;
  for (const auto& t : res.diagnostics.restarts) converged += t.converged ? 1 : 0;
  std::printf("model %s\n", fl::model_to_json(res.model).c_str());
  std::printf("risk %.12g\n", res.risk);
  if (res.diagnostics.least_squares) {
    std::printf("solver least-squares\n");
  } else {
    std::printf("solver gradient-descent restarts=%zu converged=%zu best=%zu\n",
                res.diagnostics.restarts.size(), converged,
                res.diagnostics.best_restart);
  }
  return 0;
}

struct DisambiguateArgs {
  std::string model;
  std::string data;
  std::string loss = "l2";
  std::optional<double> alpha;
  std::size_t levels = 0;
  std::string out;
};

int run_disambiguate(const DisambiguateArgs& a) {
  const fl::LinearModel model = fl::load_model(a.model);
  const std::vector<fl::Example> data = fl::load_examples(a.data);
  const fl::LossKind kind = fl::parse_loss_spec(a.loss).kind;
  Sink sink(a.out);
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (a.levels > 0 && !a.alpha) {
      for (const auto& g : fl::gradual_selection(kind, model, data[i], fl::AlphaGrid(a.levels))) {
        sink.get() << fl::selection_to_json(g.selection, i, g.alpha) << '\n';
      }
      continue;
    }
    const double alpha = a.alpha.value_or(1.0);
    sink.get() << fl::selection_to_json(fl::disambiguate(kind, model, data[i], alpha), i,
                                        alpha)
               << '\n';
  }
  return 0;
}

struct ExperimentArgs {
  std::string which = "semi";
  std::string config;
  std::string out;
  std::optional<std::size_t> repetitions;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  const fl::ExperimentKind kind = fl::parse_experiment_kind(a.which);
  fl::ExperimentConfig cfg =
      a.config.empty() ? fl::ExperimentConfig{} : fl::load_experiment_config(a.config);
  if (a.repetitions) cfg.repetitions = *a.repetitions;
  if (a.seed) cfg.seed = *a.seed;
  if (a.threads) cfg.threads = *a.threads;
  const std::vector<fl::CurvePoint> curve = fl::run_experiment(kind, cfg);
  Sink sink(a.out);
  fl::write_curve_csv(sink.get(), curve);
  return 0;
}

struct SampleArgs {
  std::string which = "semi";
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::string config;
  std::string out;
};

int run_sample(const SampleArgs& a) {
  const fl::ExperimentKind kind = fl::parse_experiment_kind(a.which);
  const fl::ExperimentConfig cfg =
      a.config.empty() ? fl::ExperimentConfig{} : fl::load_experiment_config(a.config);
  const std::vector<fl::Example> clean =
      fl::generate_sample(cfg, fl::derive_seed(a.seed, 0, 0));
  const std::uint64_t corrupt = fl::derive_seed(a.seed, 0, 1);
  const std::vector<fl::Example> data =
      kind == fl::ExperimentKind::SemiSupervised
          ? fl::mask_labels(clean, a.gamma, corrupt)
          : fl::flip_labels(clean, a.gamma, corrupt).data;
  Sink sink(a.out);
  fl::write_examples(sink.get(), data);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learning from imprecise and fuzzy observations"};
  app.require_subcommand(1);

  LossCurveArgs lc;
  auto* lc_cmd = app.add_subcommand("loss-curve", "Tabulate a generalized loss over predictions");
  lc_cmd->add_option("--loss", lc.loss,
                     "l1, l2, zero_one, hinge, exponential, logistic, gmli-interval, "
                     "gmli-logistic");
  lc_cmd->add_option("--fuzzy,--datum", lc.datum,
                     "Observation as JSON, e.g. '{\"trap\":[2,4,6,8]}'");
  lc_cmd->add_option("--range", lc.range, "Prediction grid lo:hi:step");
  lc_cmd->add_option("--shift", lc.shift, "Half-width of the score range (imprecise input)");
  lc_cmd->add_option("--w", lc.w, "Label confidence for margin losses without --fuzzy");
  lc_cmd->add_option("--y", lc.y, "Observed label sign for margin losses without --fuzzy")
      ->check(CLI::IsMember({-1, 1}));
  lc_cmd->add_option("--levels", lc.levels, "Number of alpha levels");
  lc_cmd->add_flag("--normalized", lc.normalized, "Normalized likelihood loss");
  lc_cmd->add_option("--sigma", lc.sigma, "Predictive standard deviation");

  RiskArgs rk;
  auto* rk_cmd = app.add_subcommand("risk", "Risk function and aggregated risk of a model");
  rk_cmd->add_option("--model", rk.model, "Model JSON file")->required();
  rk_cmd->add_option("--data", rk.data, "Examples, JSON lines")->required();
  rk_cmd->add_option("--loss", rk.loss, "Loss spec <kind>[:set|fuzzy|gmli]");
  rk_cmd->add_option("--levels", rk.levels, "Number of alpha levels");
  rk_cmd->add_option("--lambda", rk.lambda, "Squared-norm penalty weight");
  rk_cmd->add_flag("--quadrature", rk.quadrature, "Integrate fuzzy outputs on the level grid");

  FitArgs ft;
  auto* ft_cmd = app.add_subcommand("fit", "Fit a linear model");
  ft_cmd->add_option("--data", ft.data, "Examples, JSON lines")->required();
  ft_cmd->add_option("--loss", ft.loss, "Loss spec <kind>[:set|fuzzy|gmli]");
  ft_cmd->add_option("--out", ft.out, "Where to write the model JSON");
  ft_cmd->add_option("--lr", ft.opt.learning_rate, "Learning rate");
  ft_cmd->add_option("--iters", ft.opt.max_iters, "Iterations per restart");
  ft_cmd->add_option("--tol", ft.opt.grad_tol, "Gradient norm tolerance");
  ft_cmd->add_option("--restarts", ft.opt.restarts, "Random restarts");
  ft_cmd->add_option("--init-scale", ft.opt.init_scale, "Initialization range");
  ft_cmd->add_option("--seed", ft.opt.seed, "Random seed");
  ft_cmd->add_option("--lambda", ft.lambda, "Squared-norm penalty weight");
  ft_cmd->add_option("--levels", ft.levels, "Number of alpha levels");

  DisambiguateArgs db;
  auto* db_cmd = app.add_subcommand("disambiguate", "Most plausible precise data under a model");
  db_cmd->add_option("--model", db.model, "Model JSON file")->required();
  db_cmd->add_option("--data", db.data, "Examples, JSON lines")->required();
  db_cmd->add_option("--loss", db.loss, "Loss spec");
  db_cmd->add_option("--alpha", db.alpha, "Cut level in (0, 1]");
  db_cmd->add_option("--levels", db.levels, "Emit the gradual selection on this many levels");
  db_cmd->add_option("--out", db.out, "Output file (default stdout)");

  ExperimentArgs ex;
  auto* ex_cmd = app.add_subcommand("experiment", "Run a synthetic classification experiment");
  ex_cmd->add_option("--which", ex.which, "semi or noise")->required();
  ex_cmd->add_option("--config", ex.config, "Experiment config JSON");
  ex_cmd->add_option("--out", ex.out, "CSV output (default stdout)");
  ex_cmd->add_option("--repetitions", ex.repetitions, "Override repetitions");
  ex_cmd->add_option("--seed", ex.seed, "Override seed");
  ex_cmd->add_option("--threads", ex.threads, "Override worker threads");

  SampleArgs sp;
  auto* sp_cmd = app.add_subcommand("sample", "Write one corrupted experiment sample");
  sp_cmd->add_option("--which", sp.which, "semi or noise");
  sp_cmd->add_option("--gamma", sp.gamma, "Corruption probability");
  sp_cmd->add_option("--seed", sp.seed, "Random seed");
  sp_cmd->add_option("--config", sp.config, "Experiment config JSON");
  sp_cmd->add_option("--out", sp.out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*lc_cmd) return run_loss_curve(lc);
    if (*rk_cmd) return run_risk(rk);
    if (*ft_cmd) return run_fit(ft);
    if (*db_cmd) return run_disambiguate(db);
    if (*ex_cmd) return run_experiment_cmd(ex);
    if (*sp_cmd) return run_sample(sp);
  } catch (const fl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
