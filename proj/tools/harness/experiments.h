// Copyright 2026 The ifom Authors
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

// Experiment drivers behind the CLI subcommands. Workers compute; every file
// is written by the calling (coordinator) thread.

#ifndef IFOM_TOOLS_HARNESS_EXPERIMENTS_H_
#define IFOM_TOOLS_HARNESS_EXPERIMENTS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "harness/config.h"
#include "harness/registry.h"
#include "ifom/rates.h"
#include "ifom/trace.h"

namespace ifom::harness {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfigError = 2,
  kExitDiverged = 3,
};

struct CommandOptions {
  std::optional<std::string> out_dir;
  std::optional<uint64_t> seed;
  std::optional<int> jobs;
};

// --out, then the config's output_dir, then $INEXACT_FOM_OUT, then
// "ifom_out".
std::string ResolveOutputDir(const RunConfig& config,
                             const CommandOptions& options);

// 0 means the number of logical cores.
int ResolveJobs(const RunConfig& config, const CommandOptions& options);

// Runs body(i) for i in [0, n) on `jobs` threads.
void ParallelFor(int n, int jobs, const std::function<void(int)>& body);

struct SeedOutcome {
  uint64_t seed = 0;
  std::string csv;
  // Gap per iteration (minimization) or |z - z*|^2 (saddles).
  std::vector<double> measure;
  std::vector<double> envelope;
  RunStatus status = RunStatus::kCompleted;
  int64_t calls = 0;
  RateFit fit;
  Verdict verdict = Verdict::kInconclusive;
  int64_t envelope_violations = 0;
};

struct RunOutcome {
  Json problem;
  ResolvedAlgorithm algorithm;
  double alpha_eff = 0.0;
  double tolerance = 0.0;
  std::vector<SeedOutcome> seeds;
  Verdict worst = Verdict::kConverged;
};

// Builds the problem once and runs every seed; no files are touched.
RunOutcome ExecuteRun(const RunConfig& config, int jobs);

int RunCommand(const RunConfig& config, const CommandOptions& options,
               std::ostream& log);
int SweepCommand(const RunConfig& config, const CommandOptions& options,
                 std::ostream& log);
int ProbeCommand(const RunConfig& config, const CommandOptions& options,
                 std::ostream& log);
// Re-renders plot.svg and prints a summary from an existing output
// directory (trace.csv or scan.csv).
int ReportCommand(const std::string& out_dir, std::ostream& log);
// Runs the invariant suites and prints a pass/fail table.
int VerifyCommand(const CommandOptions& options, std::ostream& log);

// Sets a dotted parameter ("noise.alpha", "algorithm.eta", ...) on a copy.
RunConfig WithParameter(const RunConfig& config, const std::string& param,
                        double value);

}  // namespace ifom::harness

#endif  // IFOM_TOOLS_HARNESS_EXPERIMENTS_H_
