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

// Empirical worst-case analysis: alpha-threshold scans over (alpha, eta)
// grids and greedy adversarial runs.

#ifndef IFOM_PROBE_H_
#define IFOM_PROBE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ifom/oracles.h"
#include "ifom/problems.h"
#include "ifom/rates.h"
#include "ifom/trace.h"
#include "ifom/types.h"

namespace ifom {

enum class SaddleAlgorithm { kSimGda, kAltGda, kEg };

// "sim-gda" | "alt-gda" | "eg"; anything else is a ConfigError.
SaddleAlgorithm ParseSaddleAlgorithm(const std::string& name);
std::string AlgorithmName(SaddleAlgorithm algorithm);

// Runs `algorithm` with one step size for both blocks.
SaddleTrace RunSaddleAlgorithm(SaddleAlgorithm algorithm,
                               const SaddleProblem& sp, InexactOracle& oracle,
                               const Vector& z_start, double eta,
                               int iterations);

// solution + (1, ..., 1, -1, ..., -1)/sqrt(d) with the signs split at the
// x/y blocks, the default starting point of scans. On the epsilon-saddle this
// is where the rotation adversary's orbit under Alt-GDA is closest to the
// solution, so a short run cannot mistake the orbit for contraction.
Vector DefaultScanStart(const SaddleProblem& sp);

// Greedy adversary at every oracle call: closed form for single-step
// updates, direction grid with `grid_points` candidates for the
// extragradient extrapolation. Rejects stacked dimensions above 4 for EG.
SaddleTrace GreedyAdversarialRun(SaddleAlgorithm algorithm,
                                 const SaddleProblem& sp, double alpha,
                                 double eta, int iterations, int grid_points,
                                 const Vector& z_start = Vector());

struct ScanConfig {
  SaddleAlgorithm algorithm = SaddleAlgorithm::kSimGda;
  // Empty grids take the defaults below.
  std::vector<double> alpha_grid;
  std::vector<double> step_grid;
  int iterations = 5000;
  std::vector<uint64_t> seeds = {1};
  // A cell converges when every policy fits rho < 1 - tolerance. Empty means
  // DefaultScanTolerance.
  std::optional<double> tolerance;
  // Worker threads; 0 means the number of logical cores.
  int jobs = 0;
  int grid_points = 256;
  Vector z_start;
};

struct ScanRow {
  double alpha = 0.0;
  double eta = 0.0;
  std::string policy;
  RateFit fit;
  Verdict verdict = Verdict::kInconclusive;
};

struct ScanResult {
  std::string algorithm;
  double mu = 0.0;
  double lip = 0.0;
  double tolerance = 0.0;
  std::vector<double> alpha_grid;
  std::vector<double> step_grid;
  // One row per executed (alpha, eta, policy) run, in grid order. Sphere
  // runs are skipped for cells the adversaries already break.
  std::vector<ScanRow> rows;
  // Worst verdict and largest rho per cell, indexed [alpha][eta].
  std::vector<std::vector<Verdict>> verdicts;
  std::vector<std::vector<double>> rho;
  // Largest alpha for which some eta converges.
  std::optional<double> threshold;
  // Cells (alpha index, eta index) converging under greedy noise while a
  // smaller alpha at the same eta does not.
  std::vector<std::pair<int, int>> monotonicity_violations;
};

// 32 points on [0, min(2 mu/L, 0.95)] for the GDA methods, on
// [0, min(1.5 sqrt(mu/L), 0.95)] for EG.
std::vector<double> DefaultAlphaGrid(SaddleAlgorithm algorithm, double mu,
                                     double lip, int points = 32);
// 64 log-spaced points on [1e-4/L, 10/L].
std::vector<double> DefaultStepGrid(double lip, int points = 64);
// 1e-4 (mu/L)^2: the best exact GDA contraction of |z - z*|^2 is
// 1 - (mu/L)^2, so a fixed tolerance would misread slow but genuine
// convergence at large condition numbers.
double DefaultScanTolerance(double mu, double lip);

// Runs every (alpha, eta) cell under the greedy adversary, the rotation
// adversary where it is admissible (epsilon-saddle, alpha >= mu/L), and
// sphere noise for each seed; fits rho on |z - z*|^2.
ScanResult AlphaThresholdScan(const SaddleProblem& sp,
                              const ScanConfig& config);

// Header alpha,eta,policy,rho_fit,verdict.
std::string ScanToCsv(const ScanResult& result);

}  // namespace ifom

#endif  // IFOM_PROBE_H_
