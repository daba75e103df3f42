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

// Saddle-point and operator methods with an inexact stacked oracle:
// simultaneous and alternating gradient descent-ascent, and extragradient.

#ifndef IFOM_SADDLE_SOLVERS_H_
#define IFOM_SADDLE_SOLVERS_H_

#include "ifom/oracles.h"
#include "ifom/problems.h"
#include "ifom/trace.h"
#include "ifom/types.h"

namespace ifom {

// x+ = x - eta_x g~_x(x, y), y+ = y + eta_y g~_y(x, y). Both partials come
// from one joint emission of the stacked operator per iteration.
SaddleTrace SimGdaRun(const SaddleProblem& sp, InexactOracle& oracle,
                      const Vector& z_start, double eta_x, double eta_y,
                      int iterations);

// x+ from (x, y), then y+ from (x+, y): two emissions per iteration, each a
// full stacked query of which one block is used.
SaddleTrace AltGdaRun(const SaddleProblem& sp, InexactOracle& oracle,
                      const Vector& z_start, double eta_x, double eta_y,
                      int iterations);

// z_half = z - eta g~(z), z+ = z - eta g~(z_half); two emissions per
// iteration. The Lyapunov column holds |z - z*|^2 / eta.
SaddleTrace EgRun(const OperatorProblem& op, InexactOracle& oracle,
                  const Vector& z_start, double eta, int iterations);

// All three stop with RunStatus::kDiverged once |z - z*|^2 exceeds 1e6 times
// its initial value or an iterate is non-finite.

}  // namespace ifom

#endif  // IFOM_SADDLE_SOLVERS_H_
