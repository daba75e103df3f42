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
// Benchmark problems with exact gradients, exact constants and certified
// solutions.

#ifndef IFOM_PROBLEMS_H_
#define IFOM_PROBLEMS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ifom/types.h"

namespace ifom {

using ScalarFn = std::function<double(const Vector&)>;
using FieldFn = std::function<Vector(const Vector&)>;

// A differentiable L-smooth, mu-strongly convex objective. Instances are
// immutable after construction and safe to share across threads.
struct MinProblem {
  std::string name;
  int dimension = 0;
  ScalarFn value;
  FieldFn gradient;
  double mu = 0.0;
  double lip = 0.0;
  Vector minimizer;
  double optimal_value = 0.0;
  // Set for quadratics f(x) = 0.5 x'Hx - b'x. Suboptimality() then evaluates
  // 0.5 (x-x*)'H(x-x*) directly, which stays accurate down to 1e-300 instead
  // of bottoming out at the cancellation floor of f(x) - f*.
  std::optional<Matrix> hessian;

  double Suboptimality(const Vector& x) const;
};

// A vector field g with a zero z*, mu-quasi-strongly monotone and
// L-Lipschitz.
struct OperatorProblem {
  std::string name;
  int dimension = 0;
  FieldFn field;
  double mu = 0.0;
  double lip = 0.0;
  Vector solution;
  // Set when g(z) = linear_part * (z - solution); lets adversaries evaluate
  // many candidate points with one matrix product.
  std::optional<Matrix> linear_part;
  // Set for operators built from EpsilonSaddle; the rotation adversary is
  // only defined there.
  std::optional<double> epsilon;
  // Size of the leading x-block when the operator came from a saddle
  // problem, 0 otherwise.
  int x_dimension = 0;
};

// f(x, y) = 0.5 x'Px + y'Ax - 0.5 y'Qy + bx'x - by'y. Every instance in this
// library is a bilinearly coupled quadratic, so the stacked operator
// g_z(z) = [grad_x f; -grad_y f] is affine and stored explicitly.
struct SaddleProblem {
  std::string name;
  int dx = 0;
  int dy = 0;
  double mu_x = 0.0;
  double mu_y = 0.0;
  double lip_x = 0.0;
  double lip_y = 0.0;
  double lip_xy = 0.0;
  // Aggregate constants of the stacked operator.
  double mu = 0.0;
  double lip = 0.0;
  Vector x_star;
  Vector y_star;
  std::optional<double> epsilon;

  Matrix p;
  Matrix q;
  Matrix a;
  Vector bx;
  Vector by;

  double Value(const Vector& x, const Vector& y) const;
  Vector GradX(const Vector& x, const Vector& y) const;
  Vector GradY(const Vector& x, const Vector& y) const;
  // [P A'; -A Q], the linear part of the stacked operator.
  Matrix StackedMatrix() const;
  Vector StackedField(const Vector& z) const;
  Vector Solution() const;
  int dimension() const { return dx + dy; }
};

// Quadratic 0.5 x'Hx - b'x with caller-certified constants; the minimizer
// comes from a Cholesky solve.
MinProblem QuadraticProblem(std::string name, const Matrix& hessian,
                            const Vector& b, double mu, double lip);

// Nesterov's worst-case quadratic
//   f(x) = mu(kappa-1)/8 (x_1^2 + sum (x_j - x_{j+1})^2 - 2 x_1) + mu/2 |x|^2
// with lip = mu * kappa.
MinProblem NesterovWorst(int d, double mu, double kappa);

// Quadratic with spectrum in [mu, lip] (both endpoints attained when d >= 2)
// in a random orthonormal basis and a Gaussian linear term.
MinProblem RandomQuadratic(int d, double mu, double lip, uint64_t seed);

// Ridge-regularized logistic regression on seeded Gaussian data:
//   f(x) = (1/n) sum log(1 + exp(-y_i a_i'x)) + lambda/2 |x|^2,
// mu = lambda, lip = lambda + |A|_2^2 / (4n). The minimizer is computed by
// Newton's method.
MinProblem RegularizedLogistic(int num_samples, int d, double lambda,
                               uint64_t seed);

SaddleProblem EpsilonSaddle(double eps);

struct CoupledQuadraticSpec {
  double mu_x = 1.0;
  double mu_y = 1.0;
  double lip_x = 1.0;
  double lip_y = 1.0;
  double lip_xy = 1.0;
  int dx = 2;
  int dy = 2;
  uint64_t seed = 0;
  // Scale of the seeded Gaussian linear terms bx, by; 0 keeps the saddle
  // point at the origin.
  double linear_scale = 0.0;
};

SaddleProblem CoupledQuadraticSaddle(const CoupledQuadraticSpec& spec);

OperatorProblem ToOperator(const SaddleProblem& sp);

}  // namespace ifom

#endif  // IFOM_PROBLEMS_H_
