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

// Minimization with an inexact gradient oracle: the relative-error
// accelerated method (RE-AGM), the similar-triangles method (STM) and
// gradient descent with the noise-corrected step.

#ifndef IFOM_MIN_SOLVERS_H_
#define IFOM_MIN_SOLVERS_H_

#include <optional>

#include "ifom/oracles.h"
#include "ifom/problems.h"
#include "ifom/trace.h"
#include "ifom/types.h"

namespace ifom {

struct ReagmConstants {
  double h = 0.0;
  double l_hat = 0.0;
  double s = 0.0;
  double m = 0.0;
  double q = 0.0;
  // Larger root of m a^2 + (s - m) a - q = 0.
  double a = 0.0;
};

// `mu` is the algorithm's strong-convexity argument. Rejects alpha outside
// [0, 1/2) and mu outside (0, lip].
ReagmConstants ComputeReagmConstants(double lip, double mu, double alpha);

// h = (1/L) ((1-alpha)/(1+alpha))^(3/2).
double NoiseCorrectedStep(double lip, double alpha);
// L (1+alpha) / (1-alpha)^3.
double NoiseCorrectedLipschitz(double lip, double alpha);

struct ReagmOptions {
  // Noise level used for the constants; defaults to the oracle's bound.
  std::optional<double> alpha;
  // Runs with mu/2 as the algorithm argument, as the convergence guarantees
  // require, and fills the envelope column.
  bool envelope_mode = true;
  // Algorithm argument when envelope_mode is off; defaults to problem.mu.
  std::optional<double> mu_alg;
};

// One oracle call per iteration. Stops early with RunStatus::kDiverged once
// the gap exceeds 1e6 times its initial value or an iterate is non-finite.
Trace ReagmRun(const MinProblem& problem, InexactOracle& oracle,
               const Vector& x_start, int iterations,
               const ReagmOptions& options = {});

// alpha_k = (1 + mu_hat A)/(2L) + sqrt((1 + mu_hat A)^2/(4L^2)
//           + A (1 + mu_hat A)/L) with A = A_{k-1}.
double StmStepCoefficient(double lip, double mu_hat, double a_prev);

// mu_hat = mu/2, A_0 = alpha_0 = 1/L. One initialization call plus one call
// per iteration.
Trace StmRun(const MinProblem& problem, InexactOracle& oracle,
             const Vector& x_start, int iterations);

struct GdOptions {
  // Defaults to NoiseCorrectedStep(L, alpha).
  std::optional<double> step;
  // Defaults to the oracle's bound.
  std::optional<double> alpha;
};

Trace GdRun(const MinProblem& problem, InexactOracle& oracle,
            const Vector& x_start, int iterations,
            const GdOptions& options = {});

}  // namespace ifom

#endif  // IFOM_MIN_SOLVERS_H_
