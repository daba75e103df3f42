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

#include "ifom/min_solvers.h"

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "ifom/rates.h"

namespace ifom {
namespace {

constexpr double kDivergenceFactor = 1e6;

bool AllFinite(const Vector& v) { return v.allFinite(); }

// Appends rows and enforces the divergence rule.
class Recorder {
 public:
  Recorder(const MinProblem& problem, std::string algorithm)
      : problem_(problem) {
    trace_.algorithm = std::move(algorithm);
  }

  // Returns false once the run must stop.
  bool Record(int64_t k, const Vector& x, int64_t calls,
              double envelope = std::numeric_limits<double>::quiet_NaN()) {
    if (!AllFinite(x)) return Abort(x);
    TraceRow row;
    row.k = k;
    row.gap = problem_.Suboptimality(x);
    row.grad_norm = problem_.gradient(x).norm();
    row.dist = (x - problem_.minimizer).norm();
    row.calls = calls;
    row.envelope = envelope;
    if (!std::isfinite(row.gap)) return Abort(x);
    if (trace_.rows.empty()) initial_gap_ = row.gap;
    trace_.rows.push_back(row);
    trace_.final_iterate = x;
    if (initial_gap_ > 0.0 && row.gap > kDivergenceFactor * initial_gap_) {
      trace_.status = RunStatus::kDiverged;
      return false;
    }
    return true;
  }

  Trace Finish() { return std::move(trace_); }

 private:
  bool Abort(const Vector& x) {
    trace_.status = RunStatus::kDiverged;
    trace_.final_iterate = x;
    return false;
  }

  const MinProblem& problem_;
  Trace trace_;
  double initial_gap_ = 0.0;
};

void CheckRun(const MinProblem& problem, const InexactOracle& oracle,
              const Vector& x_start, int iterations) {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (x_start.size() != problem.dimension ||
      oracle.dimension() != problem.dimension) {
    throw ConfigError("dimension mismatch between problem, oracle and start");
  }
}

}  // namespace

double NoiseCorrectedStep(double lip, double alpha) {
  return std::pow((1.0 - alpha) / (1.0 + alpha), 1.5) / lip;
}

double NoiseCorrectedLipschitz(double lip, double alpha) {
  return lip * (1.0 + alpha) / std::pow(1.0 - alpha, 3);
}

ReagmConstants ComputeReagmConstants(double lip, double mu, double alpha) {
  if (!(alpha >= 0.0 && alpha < 0.5)) {
    throw ConfigError("RE-AGM: alpha must lie in [0, 1/2)");
  }
  if (!(mu > 0.0 && mu <= lip)) {
    throw ConfigError("RE-AGM: need 0 < mu <= L");
  }
  ReagmConstants c;
  c.h = NoiseCorrectedStep(lip, alpha);
  c.l_hat = NoiseCorrectedLipschitz(lip, alpha);
  c.s = 1.0 + 2.0 * alpha + 2.0 * alpha * alpha;
  c.m = 1.0 - 2.0 * alpha;
  c.q = mu / c.l_hat;
  const double diff = c.s - c.m;
  c.a = (-diff + std::sqrt(diff * diff + 4.0 * c.m * c.q)) / (2.0 * c.m);
  return c;
}

Trace ReagmRun(const MinProblem& problem, InexactOracle& oracle,
               const Vector& x_start, int iterations,
               const ReagmOptions& options) {
  CheckRun(problem, oracle, x_start, iterations);
  const double alpha = options.alpha.value_or(oracle.alpha_eff());
  const double mu_alg = options.envelope_mode
                            ? problem.mu / 2.0
                            : options.mu_alg.value_or(problem.mu);
  const ReagmConstants c = ComputeReagmConstants(problem.lip, mu_alg, alpha);

  std::optional<double> factor;
  double scale = 0.0;
  if (options.envelope_mode) {
    if (const auto tau = ReagmTauForAlpha(problem.lip, problem.mu, alpha)) {
      factor = ReagmEnvelopeFactor(problem.lip, problem.mu, *tau);
      const double r = (x_start - problem.minimizer).norm();
      scale = problem.lip * r * r;
    }
  }
  const auto envelope = [&](int k) {
    return factor ? scale * std::pow(*factor, k) : std::nan("");
  };

  Recorder recorder(problem, "reagm");
  Vector x = x_start;
  Vector u = x_start;
  if (!recorder.Record(0, x, oracle.call_count(), envelope(0))) {
    return recorder.Finish();
  }
  for (int k = 0; k < iterations; ++k) {
    const Vector y = (c.a * u + x) / (1.0 + c.a);
    const auto next_u = [&](const Vector& g) -> Vector {
      return (1.0 - c.a) * u + c.a * y - (c.a / mu_alg) * g;
    };
    StepHint hint;
    if (oracle.wants_hint()) {
      // Two updates share the emission; score both distances.
      hint.score = [&](const Vector& g) {
        return (y - c.h * g - problem.minimizer).norm() +
               (next_u(g) - problem.minimizer).norm();
      };
    }
    const Vector g = oracle.Query(y, hint);
    u = next_u(g);
    x = y - c.h * g;
    if (!recorder.Record(k + 1, x, oracle.call_count(), envelope(k + 1))) {
      break;
    }
  }
  return recorder.Finish();
}

double StmStepCoefficient(double lip, double mu_hat, double a_prev) {
  const double w = 1.0 + mu_hat * a_prev;
  return w / (2.0 * lip) +
         std::sqrt(w * w / (4.0 * lip * lip) + a_prev * w / lip);
}

Trace StmRun(const MinProblem& problem, InexactOracle& oracle,
             const Vector& x_start, int iterations) {
  CheckRun(problem, oracle, x_start, iterations);
  const double lip = problem.lip;
  const double mu_hat = problem.mu / 2.0;
  Recorder recorder(problem, "stm");

  // A_k grows geometrically and overflows on long runs, so the recursion is
  // carried in t = 1/A and r = alpha_k / A_{k-1}; dividing the alpha_k
  // formula by A_{k-1} gives r = (t + mu_hat)/(2L)
  // + sqrt((t + mu_hat)^2/(4L^2) + (t + mu_hat)/L).
  double t = lip;  // 1 / A_0
  const Vector y0 = x_start;
  StepHint hint0;
  if (oracle.wants_hint()) hint0 = StepHint::Descent(y0, 1.0 / lip);
  Vector z = y0 - oracle.Query(y0, hint0) / lip;
  Vector x = z;
  if (!recorder.Record(0, x, oracle.call_count())) return recorder.Finish();

  for (int k = 1; k <= iterations; ++k) {
    const double w = t + mu_hat;
    const double r = w / (2.0 * lip) + std::sqrt(w * w / (4.0 * lip * lip) + w / lip);
    const double keep = 1.0 / (1.0 + r);  // A_{k-1} / A_k
    const double mix = r / (1.0 + r);     // alpha_k / A_k
    t *= keep;
    // alpha_k / (1 + mu_hat A_k) = (alpha_k / A_k) / (1/A_k + mu_hat).
    const double z_step = mix / (t + mu_hat);
    const Vector y = keep * x + mix * z;
    const auto next_z = [&](const Vector& g) -> Vector {
      return z - z_step * (g + mu_hat * (z - y));
    };
    StepHint hint;
    if (oracle.wants_hint()) {
      hint.score = [&](const Vector& g) {
        const Vector zn = next_z(g);
        return (keep * x + mix * zn - problem.minimizer).norm() +
               (zn - problem.minimizer).norm();
      };
    }
    z = next_z(oracle.Query(y, hint));
    x = keep * x + mix * z;
    if (!recorder.Record(k, x, oracle.call_count())) break;
  }
  return recorder.Finish();
}

Trace GdRun(const MinProblem& problem, InexactOracle& oracle,
            const Vector& x_start, int iterations, const GdOptions& options) {
  CheckRun(problem, oracle, x_start, iterations);
  const double alpha = options.alpha.value_or(oracle.alpha_eff());
  const double h = options.step.value_or(NoiseCorrectedStep(problem.lip, alpha));
  if (!(h > 0.0)) throw ConfigError("gd: step must be positive");
  Recorder recorder(problem, "gd");
  Vector x = x_start;
  if (!recorder.Record(0, x, oracle.call_count())) return recorder.Finish();
  for (int k = 0; k < iterations; ++k) {
    StepHint hint;
    if (oracle.wants_hint()) hint = StepHint::Descent(x, h);
    x -= h * oracle.Query(x, hint);
    if (!recorder.Record(k + 1, x, oracle.call_count())) break;
  }
  return recorder.Finish();
}

}  // namespace ifom
