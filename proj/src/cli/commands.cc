//
// Copyright 2026 The gaussdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "gaussdp/cli/commands.h"

#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaussdp/calibrate.h"
#include "gaussdp/categorical.h"
#include "gaussdp/errors.h"
#include "gaussdp/mech.h"

namespace gaussdp::cli {
namespace {

double ParseReal(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ParseError("cannot parse " + what + " '" + text + "' as a number");
  }
  return value;
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

const std::vector<double>& Require(const std::vector<double>& grid,
                                   const char* flag) {
  if (grid.empty()) throw DomainError(std::string(flag) + " is required");
  return grid;
}

double RequireSingle(const std::vector<double>& grid, const char* flag) {
  Require(grid, flag);
  if (grid.size() != 1) {
    throw DomainError(std::string(flag) + " takes a single value here");
  }
  return grid[0];
}

// Empty when the (mechanism, budget) pair is fine.
std::string GuaranteeWarning(Mechanism kind, const PrivacyBudget& budget,
                             double sigma, const Sensitivity& sens) {
  if (!IsClassical(kind) || budget.epsilon() <= 1.0) return "";
  std::string warning = "epsilon > 1 voids the guarantee of " +
                        std::string(MechanismName(kind)) +
                        ", which is derived for 0 < epsilon <= 1 only";
  if (sens.l2() > 0.0 && !AchievesDp({sigma, kind}, budget, sens)) {
    warning += "; this sigma does not achieve (epsilon, delta)-DP";
  }
  return warning;
}

Value OrNull(double v) {
  if (std::isnan(v)) return std::monostate{};
  return v;
}

}  // namespace

std::vector<double> ParseGrid(const std::string& spec) {
  if (spec.empty()) throw ParseError("empty grid");
  std::vector<double> grid;
  const bool log_spaced = spec.rfind("log:", 0) == 0;
  if (log_spaced || spec.rfind("lin:", 0) == 0) {
    const auto parts = Split(spec.substr(4), ':');
    if (parts.size() != 3) {
      throw ParseError("range grid must look like " + spec.substr(0, 4) +
                       "START:STOP:COUNT, got '" + spec + "'");
    }
    const double a = ParseReal(parts[0], "grid start");
    const double b = ParseReal(parts[1], "grid stop");
    const double count = ParseReal(parts[2], "grid count");
    if (!(count >= 1.0) || count != std::floor(count) || count > 1e7) {
      throw ParseError("grid count must be a positive integer, got '" +
                       parts[2] + "'");
    }
    if (log_spaced && !(a > 0.0 && b > 0.0)) {
      throw ParseError("log grid endpoints must be positive");
    }
    const auto n = static_cast<std::int64_t>(count);
    for (std::int64_t i = 0; i < n; ++i) {
      const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
      if (i == n - 1) {
        grid.push_back(b);
      } else if (log_spaced) {
        grid.push_back(a * std::pow(b / a, t));
      } else {
        grid.push_back(a + (b - a) * t);
      }
    }
    if (n == 1) grid[0] = a;
    return grid;
  }
  for (const auto& item : Split(spec, ',')) {
    grid.push_back(ParseReal(item, "grid value"));
  }
  return grid;
}

CompositionTerm ParseTerm(const std::string& spec) {
  const auto parts = Split(spec, ':');
  if (parts.size() != 2) {
    throw ParseError("term must look like DELTA:SIGMA, got '" + spec + "'");
  }
  const double l2 = ParseReal(parts[0], "term sensitivity");
  const double sigma = ParseReal(parts[1], "term sigma");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ParseError("term sigma must be positive, got '" + spec + "'");
  }
  if (!(l2 >= 0.0) || !std::isfinite(l2)) {
    throw ParseError("term sensitivity must be nonnegative, got '" + spec +
                     "'");
  }
  return {Sensitivity(l2), sigma};
}

std::vector<Mechanism> SelectedMechanisms(const RunConfig& config) {
  if (config.mechanism == "all") {
    return {kAllMechanisms.begin(), kAllMechanisms.end()};
  }
  const auto kind = ParseMechanism(config.mechanism);
  if (!kind) {
    throw DomainError("unknown mechanism '" + config.mechanism + "'");
  }
  return {*kind};
}

Table CalibrateTable(const RunConfig& config) {
  Table table{{"mechanism", "epsilon", "delta", "sensitivity", "sigma", "root",
               "iterations", "residual", "warning"},
              {}};
  const Sensitivity sens(config.sensitivity);
  const auto mechanisms = SelectedMechanisms(config);
  for (double eps : Require(config.epsilons, "--eps")) {
    for (double delta : Require(config.deltas, "--delta")) {
      const PrivacyBudget budget(eps, delta);
      for (Mechanism kind : mechanisms) {
        const CalibrationResult r =
            Calibrate(kind, budget, sens, config.tolerance);
        table.rows.push_back(
            {std::string(MechanismName(kind)), eps, delta, sens.l2(),
             r.noise.sigma, OrNull(r.root), r.iterations, OrNull(r.residual),
             GuaranteeWarning(kind, budget, r.noise.sigma, sens)});
      }
    }
  }
  return table;
}

Table CompareTable(const RunConfig& config) {
  Table table{{"epsilon", "delta", "mechanism", "sigma", "achieves_dp"}, {}};
  const Sensitivity sens(config.sensitivity);
  const auto& eps_grid = Require(config.epsilons, "--eps");
  const auto& delta_grid = Require(config.deltas, "--delta");
  for (double eps : eps_grid) {
    for (double delta : delta_grid) PrivacyBudget(eps, delta);
  }
  const auto mechanisms = SelectedMechanisms(config);
  const auto n_mech = static_cast<std::int64_t>(mechanisms.size());
  const auto n_delta = static_cast<std::int64_t>(delta_grid.size());
  const std::int64_t cells =
      static_cast<std::int64_t>(eps_grid.size()) * n_delta * n_mech;
  table.rows.resize(static_cast<std::size_t>(cells));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(cells));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < cells; ++c) {
    const double eps = eps_grid[c / (n_delta * n_mech)];
    const double delta = delta_grid[(c / n_mech) % n_delta];
    const Mechanism kind = mechanisms[c % n_mech];
    Value sigma;
    Value achieves;
    try {
      const PrivacyBudget budget(eps, delta);
      const double s = Calibrate(kind, budget, sens, config.tolerance)
                           .noise.sigma;
      sigma = s;
      achieves = AchievesDp({s, kind}, budget, sens);
    } catch (const DomainError&) {
      // Mechanism undefined at this cell (e.g. Mechanism 2 with delta >= 0.5).
    } catch (...) {
      failures[c] = std::current_exception();
    }
    table.rows[c] = {eps, delta, std::string(MechanismName(kind)), sigma,
                     achieves};
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return table;
}

Table ProfileTable(const RunConfig& config) {
  Table table{{"sigma", "dp_delta", "pdp_delta"}, {}};
  const double eps = RequireSingle(config.epsilons, "--eps");
  const Sensitivity sens(config.sensitivity);
  for (double sigma : Require(config.sigmas, "--sigma")) {
    table.rows.push_back({sigma, DpDeltaProfile(sigma, eps, sens),
                          PdpDeltaProfile(sigma, eps, sens)});
  }
  return table;
}

Table RegionTable(const RunConfig& config) {
  Table table{{"delta", "G_dwork2014", "G_dwork2006"}, {}};
  const auto& deltas = Require(config.deltas, "--delta");
  table.rows.resize(deltas.size());
  std::vector<std::exception_ptr> failures(deltas.size());
  const auto n = static_cast<std::int64_t>(deltas.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const double delta = deltas[i];
      table.rows[i] = {
          delta, FailureThreshold(Dwork2014Multiplier(delta), delta),
          FailureThreshold(Dwork2006Multiplier(delta), delta)};
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return table;
}

Table ComposeTable(const RunConfig& config) {
  Table table{{"sigma_star", "dp_delta", "pdp_delta"}, {}};
  const double eps = RequireSingle(config.epsilons, "--eps");
  if (config.terms.empty()) throw DomainError("at least one --term is required");
  table.rows.push_back({EffectiveUnitSigma(config.terms),
                        ComposedDpDelta(config.terms, eps),
                        ComposedPdpDelta(config.terms, eps)});
  return table;
}

Table ExperimentTable(const RunConfig& config) {
  Table table{{"mechanism", "trials", "sigma", "metric", "metric_stderr",
               "mean_square"},
              {}};
  const PrivacyBudget budget(RequireSingle(config.epsilons, "--eps"),
                             RequireSingle(config.deltas, "--delta"));
  if (config.trials < 1) throw DomainError("--trials must be >= 1");
  const auto mechanisms = SelectedMechanisms(config);

  Histogram histogram;
  if (config.experiment_kind == "hist") {
    if (config.csv_path.empty()) {
      throw DomainError("experiment hist requires --csv PATH");
    }
    histogram = BuildHistogram(ReadCategoricalCsv(config.csv_path));
  } else if (config.experiment_kind != "mean") {
    throw DomainError("experiment kind must be mean or hist, got '" +
                      config.experiment_kind + "'");
  }

  for (Mechanism kind : mechanisms) {
    ExperimentReport report;
    try {
      report = config.experiment_kind == "mean"
                   ? MeanExperiment(config.n, config.d, budget, kind,
                                    config.trials, config.seed,
                                    config.sensitivity_override)
                   : HistogramExperiment(histogram, budget, kind,
                                         config.trials, config.seed);
    } catch (const DomainError&) {
      if (mechanisms.size() == 1) throw;
      table.rows.push_back({std::string(MechanismName(kind)), config.trials,
                            std::monostate{}, std::monostate{},
                            std::monostate{}, std::monostate{}});
      continue;
    }
    table.rows.push_back({std::string(MechanismName(kind)), report.trials,
                          report.sigma, report.metric, report.metric_stderr,
                          report.mean_square});
  }
  return table;
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  std::string eps_spec, delta_spec, sigma_spec, format = "csv";
  std::vector<std::string> term_specs;
  double sens_override = 0.0;

  CLI::App app{"Gaussian mechanism noise calibration", "gaussdp"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", config.output_path,
                    "output file, - for standard output");
    sub->add_option("--tol", config.tolerance,
                    "bisection tolerance on the root");
  };
  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--eps", eps_spec, "epsilon value or grid")->required();
    sub->add_option("--delta", delta_spec, "delta value or grid")->required();
  };

  auto* calibrate = app.add_subcommand("calibrate", "noise for one budget");
  add_common(calibrate);
  add_budget(calibrate);
  calibrate->add_option("--sens", config.sensitivity, "l2 sensitivity");
  calibrate->add_option("--mech", config.mechanism, "mechanism tag or all");

  auto* compare = app.add_subcommand("compare", "noise of every mechanism");
  add_common(compare);
  add_budget(compare);
  compare->add_option("--sens", config.sensitivity, "l2 sensitivity");
  compare->add_option("--mech", config.mechanism, "mechanism tag or all");

  auto* profile = app.add_subcommand("profile", "delta as a function of sigma");
  add_common(profile);
  profile->add_option("--eps", eps_spec, "epsilon")->required();
  profile->add_option("--sigma", sigma_spec, "sigma grid")->required();
  profile->add_option("--sens", config.sensitivity, "l2 sensitivity");

  auto* region = app.add_subcommand("region", "classical failure frontier");
  add_common(region);
  region->add_option("--delta", delta_spec, "delta grid")->required();

  auto* compose = app.add_subcommand("compose", "compose Gaussian mechanisms");
  add_common(compose);
  compose->add_option("--term", term_specs, "DELTA:SIGMA, repeatable")
      ->required()
      ->take_all()
      ->allow_extra_args(false);
  compose->add_option("--eps", eps_spec, "target epsilon")->required();

  auto* experiment =
      app.add_subcommand("experiment", "mean or histogram release errors");
  add_common(experiment);
  add_budget(experiment);
  experiment->add_option("kind", config.experiment_kind, "mean or hist")
      ->required()
      ->check(CLI::IsMember({"mean", "hist"}));
  experiment->add_option("--mech", config.mechanism, "mechanism tag or all");
  experiment->add_option("--seed", config.seed, "random seed");
  experiment->add_option("--trials", config.trials, "number of trials");
  experiment->add_option("--n", config.n, "records (mean)");
  experiment->add_option("--d", config.d, "dimension (mean)");
  experiment->add_option("--csv", config.csv_path, "categorical CSV (hist)");
  auto* sens_flag = experiment->add_option(
      "--sens", sens_override, "sensitivity override (mean)");

  auto* synth =
      app.add_subcommand("synth", "write a synthetic census-like CSV");
  synth->add_option("--output", config.output_path,
                    "output file, - for standard output");
  synth->add_option("--rows", config.synthetic_rows, "records")->required();
  synth->add_option("--seed", config.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!eps_spec.empty()) config.epsilons = ParseGrid(eps_spec);
    if (!delta_spec.empty()) config.deltas = ParseGrid(delta_spec);
    if (!sigma_spec.empty()) config.sigmas = ParseGrid(sigma_spec);
    for (const auto& t : term_specs) config.terms.push_back(ParseTerm(t));
    if (sens_flag->count() > 0) config.sensitivity_override = sens_override;
    config.format = format == "json" ? Format::kJson : Format::kCsv;

    std::ofstream file;
    std::ostream* sink = &out;
    if (config.output_path != "-") {
      file.open(config.output_path, std::ios::binary);
      if (!file) {
        throw DomainError("cannot open output file '" + config.output_path +
                          "'");
      }
      sink = &file;
    }

    if (synth->parsed()) {
      config.command = Command::kSynth;
      if (config.synthetic_rows < 1) throw DomainError("--rows must be >= 1");
      WriteSyntheticCensusCsv(*sink, config.synthetic_rows, config.seed);
      return 0;
    }

    Table table;
    if (calibrate->parsed()) {
      config.command = Command::kCalibrate;
      table = CalibrateTable(config);
    } else if (compare->parsed()) {
      config.command = Command::kCompare;
      table = CompareTable(config);
    } else if (profile->parsed()) {
      config.command = Command::kProfile;
      table = ProfileTable(config);
    } else if (region->parsed()) {
      config.command = Command::kRegion;
      table = RegionTable(config);
    } else if (compose->parsed()) {
      config.command = Command::kCompose;
      table = ComposeTable(config);
    } else {
      config.command = Command::kExperiment;
      table = ExperimentTable(config);
    }
    WriteTable(*sink, table, config.format);
    sink->flush();
    return 0;
  } catch (const ConvergenceError& e) {
    err << "gaussdp: numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "gaussdp: error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace gaussdp::cli
