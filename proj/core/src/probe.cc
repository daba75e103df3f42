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

#include "ifom/probe.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "ifom/random.h"
#include "ifom/saddle_solvers.h"

namespace ifom {
namespace {

// Worse verdicts compare greater.
int Severity(Verdict v) {
  switch (v) {
    case Verdict::kConverged:
      return 0;
    case Verdict::kInconclusive:
      return 1;
    case Verdict::kDiverged:
      return 2;
  }
  return 2;
}

struct CellOutcome {
  std::vector<ScanRow> rows;
  Verdict verdict = Verdict::kConverged;
  Verdict greedy = Verdict::kConverged;
  double rho = 0.0;
};

}  // namespace

SaddleAlgorithm ParseSaddleAlgorithm(const std::string& name) {
  if (name == "sim-gda") return SaddleAlgorithm::kSimGda;
  if (name == "alt-gda") return SaddleAlgorithm::kAltGda;
  if (name == "eg") return SaddleAlgorithm::kEg;
  throw ConfigError("unknown saddle algorithm: " + name);
}

std::string AlgorithmName(SaddleAlgorithm algorithm) {
  switch (algorithm) {
    case SaddleAlgorithm::kSimGda:
      return "sim-gda";
    case SaddleAlgorithm::kAltGda:
      return "alt-gda";
    case SaddleAlgorithm::kEg:
      return "eg";
  }
  return "unknown";
}

SaddleTrace RunSaddleAlgorithm(SaddleAlgorithm algorithm,
                               const SaddleProblem& sp, InexactOracle& oracle,
                               const Vector& z_start, double eta,
                               int iterations) {
  switch (algorithm) {
    case SaddleAlgorithm::kSimGda:
      return SimGdaRun(sp, oracle, z_start, eta, eta, iterations);
    case SaddleAlgorithm::kAltGda:
      return AltGdaRun(sp, oracle, z_start, eta, eta, iterations);
    case SaddleAlgorithm::kEg:
      return EgRun(ToOperator(sp), oracle, z_start, eta, iterations);
  }
  throw ConfigError("unknown saddle algorithm");
}

Vector DefaultScanStart(const SaddleProblem& sp) {
  const int d = sp.dimension();
  Vector offset = Vector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
  offset.tail(sp.dy) *= -1.0;
  return sp.Solution() + offset;
}

SaddleTrace GreedyAdversarialRun(SaddleAlgorithm algorithm,
                                 const SaddleProblem& sp, double alpha,
                                 double eta, int iterations, int grid_points,
                                 const Vector& z_start) {
  if (algorithm == SaddleAlgorithm::kEg && sp.dimension() > 4) {
    throw ConfigError("greedy extragradient adversary needs dimension <= 4");
  }
  GreedyPolicy policy;
  policy.alpha = alpha;
  policy.grid_points = grid_points;
  InexactOracle oracle = InexactOracle::ForSaddle(sp, policy);
  const Vector start = z_start.size() ? z_start : DefaultScanStart(sp);
  return RunSaddleAlgorithm(algorithm, sp, oracle, start, eta, iterations);
}

std::vector<double> DefaultAlphaGrid(SaddleAlgorithm algorithm, double mu,
                                     double lip, int points) {
  const double top = algorithm == SaddleAlgorithm::kEg
                         ? std::min(1.5 * std::sqrt(mu / lip), 0.95)
                         : std::min(2.0 * mu / lip, 0.95);
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = points == 1 ? 0.0 : top * i / (points - 1);
  }
  return grid;
}

std::vector<double> DefaultStepGrid(double lip, int points) {
  std::vector<double> grid(points);
  for (int j = 0; j < points; ++j) {
    const double e = points == 1 ? -4.0 : -4.0 + 5.0 * j / (points - 1);
    grid[j] = std::pow(10.0, e) / lip;
  }
  return grid;
}

double DefaultScanTolerance(double mu, double lip) {
  const double r = mu / lip;
  return 1e-4 * r * r;
}

ScanResult AlphaThresholdScan(const SaddleProblem& sp,
                              const ScanConfig& config) {
  ScanResult result;
  result.algorithm = AlgorithmName(config.algorithm);
  result.mu = sp.mu;
  result.lip = sp.lip;
  result.alpha_grid = config.alpha_grid.empty()
                          ? DefaultAlphaGrid(config.algorithm, sp.mu, sp.lip)
                          : config.alpha_grid;
  result.step_grid =
      config.step_grid.empty() ? DefaultStepGrid(sp.lip) : config.step_grid;
  result.tolerance = config.tolerance.value_or(DefaultScanTolerance(sp.mu, sp.lip));
  if (!std::is_sorted(result.alpha_grid.begin(), result.alpha_grid.end()) ||
      !std::is_sorted(result.step_grid.begin(), result.step_grid.end())) {
    throw ConfigError("scan grids must be sorted");
  }
  if (config.iterations < 10) throw ConfigError("scan needs >= 10 iterations");
  if (config.seeds.empty()) throw ConfigError("scan needs at least one seed");
  const Vector start =
      config.z_start.size() ? config.z_start : DefaultScanStart(sp);
  const int na = static_cast<int>(result.alpha_grid.size());
  const int ne = static_cast<int>(result.step_grid.size());
  const double rotation_alpha = sp.mu / sp.lip;

  const auto run_cell = [&](int cell) {
    const int i = cell / ne;
    const int j = cell % ne;
    const double alpha = result.alpha_grid[i];
    const double eta = result.step_grid[j];
    CellOutcome out;
    const auto evaluate = [&](const NoisePolicy& policy, const char* label) {
      InexactOracle oracle = InexactOracle::ForSaddle(sp, policy);
      const SaddleTrace trace = RunSaddleAlgorithm(config.algorithm, sp, oracle,
                                                   start, eta, config.iterations);
      ScanRow row;
      row.alpha = alpha;
      row.eta = eta;
      row.policy = label;
      row.fit = FitRate(trace.SquaredDistances());
      row.verdict = Classify(row.fit, trace.status == RunStatus::kDiverged,
                             result.tolerance);
      if (Severity(row.verdict) > Severity(out.verdict)) out.verdict = row.verdict;
      const double rho = trace.status == RunStatus::kDiverged
                             ? std::numeric_limits<double>::infinity()
                             : row.fit.rho;
      if (!(rho <= out.rho)) out.rho = rho;
      out.rows.push_back(row);
      return row.verdict;
    };
    GreedyPolicy greedy;
    greedy.alpha = alpha;
    greedy.grid_points = config.grid_points;
    out.greedy = evaluate(greedy, "adv-greedy");
    if (sp.epsilon.has_value() && alpha >= rotation_alpha) {
      evaluate(RotationPolicy{}, "adv-rotation");
    }
    if (out.verdict == Verdict::kConverged) {
      for (uint64_t seed : config.seeds) {
        const uint64_t cell_seed = DeriveSeed(seed, static_cast<uint64_t>(cell));
        evaluate(SpherePolicy{alpha, cell_seed}, "sphere");
        if (out.verdict != Verdict::kConverged) break;
      }
    }
    return out;
  };

  std::vector<CellOutcome> cells(static_cast<size_t>(na) * ne);
  std::atomic<int> next{0};
  const auto worker = [&]() {
    for (int cell = next++; cell < na * ne; cell = next++) {
      cells[cell] = run_cell(cell);
    }
  };
  int jobs = config.jobs > 0 ? config.jobs
                             : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, na * ne);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  result.verdicts.assign(na, std::vector<Verdict>(ne));
  result.rho.assign(na, std::vector<double>(ne));
  for (int i = 0; i < na; ++i) {
    bool any = false;
    for (int j = 0; j < ne; ++j) {
      CellOutcome& c = cells[static_cast<size_t>(i) * ne + j];
      result.verdicts[i][j] = c.verdict;
      result.rho[i][j] = c.rho;
      any = any || c.verdict == Verdict::kConverged;
      for (ScanRow& row : c.rows) result.rows.push_back(std::move(row));
    }
    if (any) result.threshold = result.alpha_grid[i];
  }
  for (int j = 0; j < ne; ++j) {
    for (int i = 1; i < na; ++i) {
      if (cells[static_cast<size_t>(i) * ne + j].greedy != Verdict::kConverged) {
        continue;
      }
      for (int lower = 0; lower < i; ++lower) {
        if (cells[static_cast<size_t>(lower) * ne + j].greedy !=
            Verdict::kConverged) {
          result.monotonicity_violations.emplace_back(i, j);
          break;
        }
      }
    }
  }
  return result;
}

std::string ScanToCsv(const ScanResult& result) {
  std::string out = "alpha,eta,policy,rho_fit,verdict\n";
  for (const ScanRow& row : result.rows) {
    out += FormatDouble(row.alpha) + ',' + FormatDouble(row.eta) + ',' +
           row.policy + ',' + FormatDouble(row.fit.rho) + ',' +
           VerdictName(row.verdict) + '\n';
  }
  return out;
}

}  // namespace ifom
