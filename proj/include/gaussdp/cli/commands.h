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

// Command implementations behind the `gaussdp` executable. Each command maps
// a RunConfig to a Table; Run() adds flag parsing, output routing and the
// exit-status contract (0 success, 2 usage or domain error, 3 numerical
// non-convergence).

#ifndef GAUSSDP_CLI_COMMANDS_H_
#define GAUSSDP_CLI_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gaussdp/calib.h"
#include "gaussdp/cli/output.h"
#include "gaussdp/compose.h"
#include "gaussdp/types.h"

namespace gaussdp::cli {

enum class Command {
  kCalibrate,
  kCompare,
  kProfile,
  kRegion,
  kCompose,
  kExperiment,
  kSynth,
};

struct RunConfig {
  Command command = Command::kCalibrate;
  std::string experiment_kind;  // "mean" or "hist"
  std::vector<double> epsilons;
  std::vector<double> deltas;
  std::vector<double> sigmas;
  double sensitivity = 1.0;
  std::optional<double> sensitivity_override;  // experiment mean only
  std::string mechanism = "all";
  std::vector<CompositionTerm> terms;
  Format format = Format::kCsv;
  std::string output_path = "-";
  std::uint64_t seed = 1;
  double tolerance = kDefaultTolerance;
  std::int64_t n = 1000;
  std::int64_t d = 10;
  std::int64_t trials = 200;
  std::string csv_path;
  std::int64_t synthetic_rows = 0;
};

// "0.1,1,5", "log:1e-8:1e-1:8" (log-spaced, endpoints included) or
// "lin:0.1:20:50". Throws ParseError.
std::vector<double> ParseGrid(const std::string& spec);

// "DELTA:SIGMA". Throws ParseError.
CompositionTerm ParseTerm(const std::string& spec);

// Mechanisms selected by config.mechanism ("all" or one tag).
std::vector<Mechanism> SelectedMechanisms(const RunConfig& config);

Table CalibrateTable(const RunConfig& config);
Table CompareTable(const RunConfig& config);
Table ProfileTable(const RunConfig& config);
Table RegionTable(const RunConfig& config);
Table ComposeTable(const RunConfig& config);
Table ExperimentTable(const RunConfig& config);

// Whole program: parses argv, runs, writes to --output (or `out`),
// diagnostics to `err`. Returns the process exit status.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace gaussdp::cli

#endif  // GAUSSDP_CLI_COMMANDS_H_
