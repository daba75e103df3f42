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

// Inexact gradient / operator oracles under relative noise
//   |g~ - g| <= alpha |g|,
// plus the forward-difference gradient estimator built from inexact values.

#ifndef IFOM_ORACLES_H_
#define IFOM_ORACLES_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "ifom/problems.h"
#include "ifom/random.h"
#include "ifom/types.h"

namespace ifom {

struct ExactPolicy {};

// g + r with r uniform on the sphere of radius alpha |g|.
struct SpherePolicy {
  double alpha = 0.0;
  uint64_t seed = 0;
};

// Each coordinate rounded to nearest (ties to even) keeping `bits` fraction
// bits of the significand.
struct MantissaPolicy {
  int bits = 52;
};

// Drops the symmetric part of the epsilon-saddle: g~ = g - eps (z - z*),
// i.e. (y, -x) at the origin. Relative error exactly mu / L.
struct RotationPolicy {};

// On each call, picks e with |e| = alpha |g| maximizing the distance from the
// point the caller is about to produce to `target` (the solution when empty).
struct GreedyPolicy {
  double alpha = 0.0;
  Vector target;
  int grid_points = 256;
};

using NoisePolicy = std::variant<ExactPolicy, SpherePolicy, MantissaPolicy,
                                 RotationPolicy, GreedyPolicy>;

// "exact" | "sphere" | "mantissa" | "adv-rotation" | "adv-greedy".
std::string PolicyName(const NoisePolicy& policy);

// Describes the update that consumes an emission so the greedy adversary can
// look ahead. Other policies ignore it.
//
// Descent form: next = base - steps .* g~, where `steps` holds the
// per-coordinate step (0 for coordinates the update discards). With
// `extragradient` set, the emission feeds the extrapolation
// z_half = base - steps .* g~ and the adversary scores the full EG step
// from base, assuming its second answer is greedy too. A `score` callback
// replaces both with an arbitrary objective maximized over the direction
// grid. Without any hint the adversary assumes a 1/L descent step.
struct StepHint {
  const Vector* base = nullptr;
  Vector steps;
  bool extragradient = false;
  std::function<double(const Vector& emitted)> score;

  static StepHint Descent(const Vector& base, double eta);
  // Step `eta` on coordinates [begin, begin + size), 0 elsewhere.
  static StepHint Block(const Vector& base, double eta, int begin, int size);
};

class InexactOracle {
 public:
  struct Emission {
    Vector exact;
    Vector noisy;
  };

  // `solution` is the default greedy target; `mu`, `lip` and `epsilon`
  // describe the problem for the policies that need them. When g is linear,
  // g(z) = M (z - solution), passing M as `linear_part` replaces calls to
  // `field` with a matrix product and speeds up the extragradient adversary.
  InexactOracle(FieldFn field, int dimension, NoisePolicy policy,
                Vector solution, double mu, double lip,
                std::optional<double> epsilon = std::nullopt,
                std::optional<Matrix> linear_part = std::nullopt);

  static InexactOracle ForMin(const MinProblem& problem, NoisePolicy policy);
  static InexactOracle ForOperator(const OperatorProblem& op,
                                   NoisePolicy policy);
  static InexactOracle ForSaddle(const SaddleProblem& sp, NoisePolicy policy);

  // One noisy evaluation; increments call_count().
  Vector Query(const Vector& z, const StepHint& hint = {});
  Emission QueryWithExact(const Vector& z, const StepHint& hint = {});

  int64_t call_count() const { return calls_; }
  // The policy's declared relative error bound.
  double alpha_eff() const { return alpha_eff_; }
  const NoisePolicy& policy() const { return policy_; }
  int dimension() const { return dim_; }
  // True when emissions depend on the StepHint (greedy adversary); solvers
  // skip building hints otherwise.
  bool wants_hint() const {
    return std::holds_alternative<GreedyPolicy>(policy_);
  }

 private:
  Vector Greedy(const GreedyPolicy& policy, const Vector& z, const Vector& g,
                const StepHint& hint);
  Vector GridSearch(const GreedyPolicy& policy, const Vector& g,
                    const std::function<double(const Vector&)>& score);
  Vector ExtragradientSearch(const GreedyPolicy& policy, const Vector& g,
                             const Vector& base, const Vector& steps);
  const Matrix& Directions(int grid_points);

  FieldFn field_;
  int dim_;
  NoisePolicy policy_;
  Vector solution_;
  double mu_;
  double lip_;
  std::optional<double> epsilon_;
  std::optional<Matrix> linear_part_;
  double alpha_eff_ = 0.0;
  Rng rng_;
  // Candidate unit directions (columns) for grid searches, built on first
  // use, and their images under linear_part_.
  Matrix directions_;
  Matrix mapped_directions_;
  int64_t calls_ = 0;
};

// Rounds x to `bits` fraction bits of significand, ties to even.
double RoundMantissa(double x, int bits);

// Unit directions (columns) searched by the grid adversary: +-1 in 1D, an
// angular grid in 2D, a fixed seeded set plus the signed coordinate axes in
// 3D and 4D. Larger dimensions are rejected.
Matrix CandidateDirections(int dim, int grid_points);

// Forward differences sum_j ((f(x + sigma u_j) - f(x)) / sigma) u_j from d+1
// evaluations of a possibly inexact value map.
Vector FiniteDiffGradient(const ScalarFn& f_tilde, const Vector& x,
                          double sigma);
// sqrt(d) L sigma / 2 + 2 sqrt(d) eps_f / sigma.
double FiniteDiffErrorBound(int d, double lip, double sigma, double eps_f);
// sigma = 2 sqrt(eps_f / L), the minimizer of the bound above.
double FiniteDiffStep(double lip, double eps_f);
// f plus an independent uniform perturbation in [-eps_f, eps_f] per call.
ScalarFn PerturbedValue(ScalarFn f, double eps_f, uint64_t seed);

struct Corollary1Report {
  int64_t samples = 0;
  double alpha_eff = 0.0;
  // Largest observed |g~ - g| / |g|.
  double max_ratio = 0.0;
  // Positive part of |g~ - g| / |g| - alpha.
  double max_bound_violation = 0.0;
  // Positive parts of (1-alpha)|g| - |g~| and |g~| - (1+alpha)|g|, relative
  // to |g|.
  double max_sandwich_violation = 0.0;
  // Positive part of sqrt(1-alpha^2) - <g~, g> / (|g~||g|).
  double max_angle_violation = 0.0;
};

// Queries the oracle at `samples` Gaussian points around `center` and checks
// the relative bound and its norm-sandwich and angle consequences on every
// emission.
Corollary1Report VerifyCorollary1(InexactOracle& oracle, const Vector& center,
                                  double radius, int samples, uint64_t seed);

}  // namespace ifom

#endif  // IFOM_ORACLES_H_
