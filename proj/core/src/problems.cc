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
#include "ifom/problems.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "Eigen/Cholesky"
#include "Eigen/Eigenvalues"
#include "Eigen/LU"
#include "Eigen/SVD"
#include "ifom/random.h"

namespace ifom {
namespace {

void Require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError(message);
}

// Sorted spectrum on [lo, hi]: both endpoints attained when n >= 2, interior
// points uniform from the generator.
Vector SeededSpectrum(int n, double lo, double hi, Rng& rng) {
  Vector s(n);
  if (n == 1) {
    s(0) = lo;
    return s;
  }
  s(0) = lo;
  s(n - 1) = hi;
  for (int i = 1; i < n - 1; ++i) s(i) = lo + (hi - lo) * rng.Uniform();
  std::sort(s.data(), s.data() + n);
  return s;
}

Matrix Conjugate(const Vector& spectrum, const Matrix& basis) {
  Matrix m = basis * spectrum.asDiagonal() * basis.transpose();
  return 0.5 * (m + m.transpose());
}

double Softplus(double t) {
  return std::max(t, 0.0) + std::log1p(std::exp(-std::abs(t)));
}

double Sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

}  // namespace

double MinProblem::Suboptimality(const Vector& x) const {
  if (hessian.has_value()) {
    const Vector diff = x - minimizer;
    return 0.5 * diff.dot(*hessian * diff);
  }
  return value(x) - optimal_value;
}

double SaddleProblem::Value(const Vector& x, const Vector& y) const {
  return 0.5 * x.dot(p * x) + y.dot(a * x) - 0.5 * y.dot(q * y) + bx.dot(x) -
         by.dot(y);
}

Vector SaddleProblem::GradX(const Vector& x, const Vector& y) const {
  return p * x + a.transpose() * y + bx;
}

Vector SaddleProblem::GradY(const Vector& x, const Vector& y) const {
  return a * x - q * y - by;
}

Matrix SaddleProblem::StackedMatrix() const {
  Matrix m(dx + dy, dx + dy);
  m.topLeftCorner(dx, dx) = p;
  m.topRightCorner(dx, dy) = a.transpose();
  m.bottomLeftCorner(dy, dx) = -a;
  m.bottomRightCorner(dy, dy) = q;
  return m;
}

Vector SaddleProblem::StackedField(const Vector& z) const {
  Vector g(dx + dy);
  const auto x = z.head(dx);
  const auto y = z.tail(dy);
  g.head(dx) = p * x + a.transpose() * y + bx;
  g.tail(dy) = q * y - a * x + by;
  return g;
}

Vector SaddleProblem::Solution() const {
  Vector z(dx + dy);
  z << x_star, y_star;
  return z;
}

MinProblem QuadraticProblem(std::string name, const Matrix& hessian,
                            const Vector& b, double mu, double lip) {
  Require(hessian.rows() == hessian.cols() && hessian.rows() == b.size(),
          "quadratic: dimension mismatch");
  Require(mu > 0.0 && mu <= lip, "quadratic: need 0 < mu <= lip");
  auto h = std::make_shared<const Matrix>(hessian);
  auto rhs = std::make_shared<const Vector>(b);
  MinProblem problem;
  problem.name = std::move(name);
  problem.dimension = static_cast<int>(b.size());
  problem.value = [h, rhs](const Vector& x) {
    return 0.5 * x.dot(*h * x) - rhs->dot(x);
  };
  problem.gradient = [h, rhs](const Vector& x) -> Vector {
    return *h * x - *rhs;
  };
  problem.mu = mu;
  problem.lip = lip;
  problem.minimizer = hessian.llt().solve(b);
  problem.optimal_value = -0.5 * b.dot(problem.minimizer);
  problem.hessian = hessian;
  return problem;
}

MinProblem NesterovWorst(int d, double mu, double kappa) {
  Require(d >= 2, "nesterov_worst: need d >= 2");
  Require(mu > 0.0, "nesterov_worst: need mu > 0");
  Require(kappa >= 1.0, "nesterov_worst: need kappa >= 1");
  // f = c (x'Tx - 2 x_1) + mu/2 |x|^2 with c = mu(kappa-1)/8 and T the
  // tridiagonal form of x_1^2 + sum (x_j - x_{j+1})^2.
  const double c = mu * (kappa - 1.0) / 8.0;
  Matrix t = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) t(j, j) = (j == d - 1) ? 1.0 : 2.0;
  for (int j = 0; j + 1 < d; ++j) t(j, j + 1) = t(j + 1, j) = -1.0;
  const Matrix hessian = 2.0 * c * t + mu * Matrix::Identity(d, d);
  Vector b = Vector::Zero(d);
  b(0) = 2.0 * c;
  return QuadraticProblem("nesterov_worst", hessian, b, mu, mu * kappa);
}

MinProblem RandomQuadratic(int d, double mu, double lip, uint64_t seed) {
  Require(d >= 1, "random_quadratic: need d >= 1");
  Require(mu > 0.0 && mu <= lip, "random_quadratic: need 0 < mu <= lip");
  Rng rng(seed);
  const Matrix basis = rng.Orthogonal(d);
  const Vector spectrum = SeededSpectrum(d, mu, lip, rng);
  const Vector b = rng.Gaussian(d);
  return QuadraticProblem("random_quadratic", Conjugate(spectrum, basis), b,
                          mu, lip);
}

MinProblem RegularizedLogistic(int num_samples, int d, double lambda,
                               uint64_t seed) {
  Require(num_samples >= 1 && d >= 1, "logistic: need positive sizes");
  Require(lambda > 0.0, "logistic: need lambda > 0");
  Rng rng(seed);
  Matrix features(num_samples, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < num_samples; ++i) features(i, j) = rng.Normal();
  }
  const Vector truth = rng.Gaussian(d);
  Vector labels(num_samples);
  for (int i = 0; i < num_samples; ++i) {
    const double noisy = features.row(i).dot(truth) + rng.Normal();
    labels(i) = noisy >= 0.0 ? 1.0 : -1.0;
  }
  // Rows scaled by their label: margin_i = (y_i a_i)'x.
  auto signed_rows =
      std::make_shared<const Matrix>(labels.asDiagonal() * features);
  const double n = num_samples;

  MinProblem problem;
  problem.name = "logistic";
  problem.dimension = d;
  problem.value = [signed_rows, n, lambda](const Vector& x) {
    const Vector margins = *signed_rows * x;
    double loss = 0.0;
    for (int i = 0; i < margins.size(); ++i) loss += Softplus(-margins(i));
    return loss / n + 0.5 * lambda * x.squaredNorm();
  };
  problem.gradient = [signed_rows, n, lambda](const Vector& x) -> Vector {
    const Vector margins = *signed_rows * x;
    Vector weights(margins.size());
    for (int i = 0; i < margins.size(); ++i) {
      weights(i) = -Sigmoid(-margins(i));
    }
    return signed_rows->transpose() * weights / n + lambda * x;
  };
  problem.mu = lambda;
  const double top = Eigen::JacobiSVD<Matrix>(features).singularValues()(0);
  problem.lip = lambda + top * top / (4.0 * n);

  Vector x = Vector::Zero(d);
  for (int iter = 0; iter < 100; ++iter) {
    const Vector g = problem.gradient(x);
    if (g.norm() <= 1e-15 * std::max(1.0, problem.lip * x.norm())) break;
    const Vector margins = *signed_rows * x;
    Vector curvature(margins.size());
    for (int i = 0; i < margins.size(); ++i) {
      const double s = Sigmoid(margins(i));
      curvature(i) = s * (1.0 - s);
    }
    Matrix hessian =
        signed_rows->transpose() * curvature.asDiagonal() * *signed_rows / n;
    hessian.diagonal().array() += lambda;
    x -= hessian.llt().solve(g);
  }
  problem.minimizer = x;
  problem.optimal_value = problem.value(x);
  return problem;
}

SaddleProblem EpsilonSaddle(double eps) {
  Require(eps > 0.0, "epsilon_saddle: need eps > 0");
  SaddleProblem sp;
  sp.name = "epsilon_saddle";
  sp.dx = sp.dy = 1;
  sp.p = Matrix::Constant(1, 1, eps);
  sp.q = Matrix::Constant(1, 1, eps);
  sp.a = Matrix::Constant(1, 1, 1.0);
  sp.bx = Vector::Zero(1);
  sp.by = Vector::Zero(1);
  sp.mu_x = sp.mu_y = sp.lip_x = sp.lip_y = eps;
  sp.lip_xy = 1.0;
  sp.mu = eps;
  sp.lip = std::sqrt(1.0 + eps * eps);
  sp.x_star = Vector::Zero(1);
  sp.y_star = Vector::Zero(1);
  sp.epsilon = eps;
  return sp;
}

SaddleProblem CoupledQuadraticSaddle(const CoupledQuadraticSpec& spec) {
  Require(spec.dx >= 1 && spec.dy >= 1, "coupled_quadratic: need dx, dy >= 1");
  Require(spec.mu_x > 0.0 && spec.mu_x <= spec.lip_x,
          "coupled_quadratic: need 0 < mu_x <= lip_x");
  Require(spec.mu_y > 0.0 && spec.mu_y <= spec.lip_y,
          "coupled_quadratic: need 0 < mu_y <= lip_y");
  Require(spec.lip_xy >= 0.0, "coupled_quadratic: need lip_xy >= 0");
  Rng rng(spec.seed);
  SaddleProblem sp;
  sp.name = "coupled_quadratic";
  sp.dx = spec.dx;
  sp.dy = spec.dy;
  sp.p = Conjugate(SeededSpectrum(spec.dx, spec.mu_x, spec.lip_x, rng),
                   rng.Orthogonal(spec.dx));
  sp.q = Conjugate(SeededSpectrum(spec.dy, spec.mu_y, spec.lip_y, rng),
                   rng.Orthogonal(spec.dy));
  const int rank = std::min(spec.dx, spec.dy);
  Vector singular(rank);
  singular(0) = spec.lip_xy;
  for (int i = 1; i < rank; ++i) singular(i) = spec.lip_xy * rng.Uniform();
  const Matrix u = rng.Orthogonal(spec.dy);
  const Matrix v = rng.Orthogonal(spec.dx);
  sp.a = u.leftCols(rank) * singular.asDiagonal() * v.leftCols(rank).transpose();
  sp.bx = spec.linear_scale * rng.Gaussian(spec.dx);
  sp.by = spec.linear_scale * rng.Gaussian(spec.dy);
  sp.mu_x = spec.mu_x;
  sp.mu_y = spec.mu_y;
  sp.lip_x = spec.lip_x;
  sp.lip_y = spec.lip_y;
  sp.lip_xy = spec.lip_xy;

  const Matrix m = sp.StackedMatrix();
  const Matrix sym = 0.5 * (m + m.transpose());
  sp.mu = Eigen::SelfAdjointEigenSolver<Matrix>(sym).eigenvalues().minCoeff();
  sp.lip = Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
  Vector offset(sp.dx + sp.dy);
  offset << sp.bx, sp.by;
  const Vector z = m.partialPivLu().solve(-offset);
  sp.x_star = z.head(sp.dx);
  sp.y_star = z.tail(sp.dy);
  return sp;
}

OperatorProblem ToOperator(const SaddleProblem& sp) {
  auto shared = std::make_shared<const SaddleProblem>(sp);
  OperatorProblem op;
  op.name = sp.name;
  op.dimension = sp.dimension();
  op.field = [shared](const Vector& z) { return shared->StackedField(z); };
  op.mu = sp.mu;
  op.lip = sp.lip;
  op.solution = sp.Solution();
  op.linear_part = sp.StackedMatrix();
  op.epsilon = sp.epsilon;
  op.x_dimension = sp.dx;
  return op;
}

}  // namespace ifom
