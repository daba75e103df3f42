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

#include "ifom/oracles.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace ifom {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr uint64_t kDirectionSeed = 0x6a09e667f3bcc908ULL;

void CheckAlpha(double alpha, const char* policy) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw ConfigError(std::string(policy) + ": alpha must lie in [0, 1)");
  }
}

// Returns the common value of the nonzero entries, or 0 if they differ.
double UniformStep(const Vector& steps) {
  double eta = 0.0;
  for (int i = 0; i < steps.size(); ++i) {
    if (steps(i) == 0.0) continue;
    if (eta == 0.0) {
      eta = steps(i);
    } else if (steps(i) != eta) {
      return 0.0;
    }
  }
  return eta;
}

}  // namespace

std::string PolicyName(const NoisePolicy& policy) {
  return std::visit(Overloaded{
                        [](const ExactPolicy&) { return "exact"; },
                        [](const SpherePolicy&) { return "sphere"; },
                        [](const MantissaPolicy&) { return "mantissa"; },
                        [](const RotationPolicy&) { return "adv-rotation"; },
                        [](const GreedyPolicy&) { return "adv-greedy"; },
                    },
                    policy);
}

StepHint StepHint::Descent(const Vector& base, double eta) {
  StepHint hint;
  hint.base = &base;
  hint.steps = Vector::Constant(base.size(), eta);
  return hint;
}

StepHint StepHint::Block(const Vector& base, double eta, int begin, int size) {
  StepHint hint;
  hint.base = &base;
  hint.steps = Vector::Zero(base.size());
  hint.steps.segment(begin, size).setConstant(eta);
  return hint;
}

InexactOracle::InexactOracle(FieldFn field, int dimension, NoisePolicy policy,
                             Vector solution, double mu, double lip,
                             std::optional<double> epsilon,
                             std::optional<Matrix> linear_part)
    : field_(std::move(field)),
      dim_(dimension),
      policy_(std::move(policy)),
      solution_(std::move(solution)),
      mu_(mu),
      lip_(lip),
      epsilon_(epsilon),
      linear_part_(std::move(linear_part)),
      rng_(0) {
  std::visit(
      Overloaded{
          [&](const ExactPolicy&) { alpha_eff_ = 0.0; },
          [&](const SpherePolicy& p) {
            CheckAlpha(p.alpha, "sphere");
            alpha_eff_ = p.alpha;
            rng_ = Rng(p.seed);
          },
          [&](const MantissaPolicy& p) {
            if (p.bits < 1 || p.bits > 52) {
              throw ConfigError("mantissa: bits must lie in [1, 52]");
            }
            alpha_eff_ = std::ldexp(1.0, -p.bits);
          },
          [&](const RotationPolicy&) {
            if (!epsilon_.has_value()) {
              throw ConfigError(
                  "adv-rotation is only defined for the epsilon_saddle");
            }
            alpha_eff_ = mu_ / lip_;
          },
          [&](const GreedyPolicy& p) {
            CheckAlpha(p.alpha, "adv-greedy");
            if (p.target.size() != 0 && p.target.size() != dim_) {
              throw ConfigError("adv-greedy: target dimension mismatch");
            }
            if (p.grid_points < 2) {
              throw ConfigError("adv-greedy: grid_points must be >= 2");
            }
            alpha_eff_ = p.alpha;
          },
      },
      policy_);
}

InexactOracle InexactOracle::ForMin(const MinProblem& problem,
                                    NoisePolicy policy) {
  return InexactOracle(problem.gradient, problem.dimension, std::move(policy),
                       problem.minimizer, problem.mu, problem.lip);
}

InexactOracle InexactOracle::ForOperator(const OperatorProblem& op,
                                         NoisePolicy policy) {
  return InexactOracle(op.field, op.dimension, std::move(policy), op.solution,
                       op.mu, op.lip, op.epsilon, op.linear_part);
}

InexactOracle InexactOracle::ForSaddle(const SaddleProblem& sp,
                                       NoisePolicy policy) {
  return ForOperator(ToOperator(sp), std::move(policy));
}

Vector InexactOracle::Query(const Vector& z, const StepHint& hint) {
  return QueryWithExact(z, hint).noisy;
}

InexactOracle::Emission InexactOracle::QueryWithExact(const Vector& z,
                                                      const StepHint& hint) {
  ++calls_;
  Emission out;
  out.exact = linear_part_.has_value() ? Vector(*linear_part_ * (z - solution_))
                                       : field_(z);
  const double gnorm = out.exact.norm();
  if (gnorm == 0.0) {
    out.noisy = out.exact;
    return out;
  }
  out.noisy = std::visit(
      Overloaded{
          [&](const ExactPolicy&) -> Vector { return out.exact; },
          [&](const SpherePolicy& p) -> Vector {
            return out.exact + (p.alpha * gnorm) * rng_.UnitVector(dim_);
          },
          [&](const MantissaPolicy& p) -> Vector {
            return out.exact.unaryExpr(
                [&](double v) { return RoundMantissa(v, p.bits); });
          },
          [&](const RotationPolicy&) -> Vector {
            return out.exact - *epsilon_ * (z - solution_);
          },
          [&](const GreedyPolicy& p) -> Vector {
            return Greedy(p, z, out.exact, hint);
          },
      },
      policy_);
  return out;
}

const Matrix& InexactOracle::Directions(int grid_points) {
  if (directions_.cols() == 0) {
    directions_ = CandidateDirections(dim_, grid_points);
    if (linear_part_.has_value()) {
      mapped_directions_ = *linear_part_ * directions_;
    }
  }
  return directions_;
}

Vector InexactOracle::Greedy(const GreedyPolicy& policy, const Vector& z,
                             const Vector& g, const StepHint& hint) {
  const double radius = policy.alpha * g.norm();
  if (radius == 0.0) return g;
  if (hint.score) return GridSearch(policy, g, hint.score);

  const Vector& target = policy.target.size() ? policy.target : solution_;
  const Vector& base = hint.base ? *hint.base : z;
  const Vector steps =
      hint.steps.size() ? hint.steps : Vector::Constant(dim_, 1.0 / lip_);
  if (hint.extragradient) return ExtragradientSearch(policy, g, base, steps);

  const double eta = UniformStep(steps);
  if (eta == 0.0) {
    return GridSearch(policy, g, [&](const Vector& emitted) {
      return (base - steps.cwiseProduct(emitted) - target).norm();
    });
  }
  // next - target = v - eta e on the updated block; push e against v.
  const Vector support = (steps.array() != 0.0).cast<double>().matrix();
  const Vector v = (base - eta * g - target).cwiseProduct(support);
  const double vnorm = v.norm();
  if (vnorm > 0.0) return g - (radius / vnorm) * v;
  // Every direction is equally bad; stay deterministic.
  const Vector gs = g.cwiseProduct(support);
  if (gs.norm() > 0.0) return g + (radius / gs.norm()) * gs;
  Vector e = Vector::Zero(dim_);
  int first = 0;
  while (first < dim_ && support(first) == 0.0) ++first;
  e(first < dim_ ? first : 0) = radius;
  return g + e;
}

Vector InexactOracle::GridSearch(
    const GreedyPolicy& policy, const Vector& g,
    const std::function<double(const Vector&)>& score) {
  const Matrix& dirs = Directions(policy.grid_points);
  const double radius = policy.alpha * g.norm();
  Vector best = g;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < dirs.cols(); ++j) {
    const Vector candidate = g + radius * dirs.col(j);
    const double s = score(candidate);
    if (s > best_score) {
      best_score = s;
      best = candidate;
    }
  }
  return best;
}

Vector InexactOracle::ExtragradientSearch(const GreedyPolicy& policy,
                                          const Vector& g, const Vector& base,
                                          const Vector& steps) {
  const Matrix& dirs = Directions(policy.grid_points);
  const Vector& target = policy.target.size() ? policy.target : solution_;
  const double eta = steps.maxCoeff();
  const double radius = policy.alpha * g.norm();
  // Candidate half points z_half = base - eta (g + radius u). The second
  // answer is greedy, so the score is |base - eta g(z_half) - target| plus
  // the largest extra push eta alpha |g(z_half)|.
  const int count = static_cast<int>(dirs.cols());
  int best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  if (linear_part_.has_value()) {
    // g(z_half) = center - eta radius M u for each candidate u.
    const Vector center = *linear_part_ * (base - eta * g - solution_);
    const Vector offset = base - target;
    const double shrink = eta * radius;
    const double push = eta * policy.alpha;
    for (int j = 0; j < count; ++j) {
      const double* mu_col = mapped_directions_.col(j).data();
      double dist2 = 0.0;
      double field2 = 0.0;
      for (int i = 0; i < dim_; ++i) {
        const double h = center(i) - shrink * mu_col[i];
        const double o = offset(i) - eta * h;
        dist2 += o * o;
        field2 += h * h;
      }
      const double score = std::sqrt(dist2) + push * std::sqrt(field2);
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
  } else {
    for (int j = 0; j < count; ++j) {
      const Vector half = base - eta * (g + radius * dirs.col(j));
      const Vector gh = field_(half);
      const double score = (base - eta * gh - target).norm() +
                           eta * policy.alpha * gh.norm();
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
  }
  return g + radius * dirs.col(best);
}

double RoundMantissa(double x, int bits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  int exponent = 0;
  const double fraction = std::frexp(x, &exponent);  // |fraction| in [0.5, 1)
  // bits + 1 significant bits: the leading one plus `bits` fraction bits.
  const double scaled = std::ldexp(fraction, bits + 1);
  return std::ldexp(std::nearbyint(scaled), exponent - bits - 1);
}

Matrix CandidateDirections(int dim, int grid_points) {
  if (dim == 1) {
    Matrix dirs(1, 2);
    dirs << 1.0, -1.0;
    return dirs;
  }
  if (dim == 2) {
    Matrix dirs(2, grid_points);
    for (int j = 0; j < grid_points; ++j) {
      const double angle = 2.0 * M_PI * j / grid_points;
      dirs(0, j) = std::cos(angle);
      dirs(1, j) = std::sin(angle);
    }
    return dirs;
  }
  if (dim <= 4) {
    Matrix dirs(dim, grid_points + 2 * dim);
    Rng rng(kDirectionSeed);
    for (int j = 0; j < grid_points; ++j) dirs.col(j) = rng.UnitVector(dim);
    for (int i = 0; i < dim; ++i) {
      dirs.col(grid_points + 2 * i) = Vector::Unit(dim, i);
      dirs.col(grid_points + 2 * i + 1) = -Vector::Unit(dim, i);
    }
    return dirs;
  }
  throw ConfigError("grid adversary supports dimension <= 4, got " +
                    std::to_string(dim));
}

Vector FiniteDiffGradient(const ScalarFn& f_tilde, const Vector& x,
                          double sigma) {
  const double f0 = f_tilde(x);
  Vector grad(x.size());
  Vector shifted = x;
  for (int j = 0; j < x.size(); ++j) {
    shifted(j) = x(j) + sigma;
    grad(j) = (f_tilde(shifted) - f0) / sigma;
    shifted(j) = x(j);
  }
  return grad;
}

double FiniteDiffErrorBound(int d, double lip, double sigma, double eps_f) {
  const double root_d = std::sqrt(static_cast<double>(d));
  return root_d * lip * sigma / 2.0 + 2.0 * root_d * eps_f / sigma;
}

double FiniteDiffStep(double lip, double eps_f) {
  return 2.0 * std::sqrt(eps_f / lip);
}

ScalarFn PerturbedValue(ScalarFn f, double eps_f, uint64_t seed) {
  auto rng = std::make_shared<Rng>(seed);
  return [f = std::move(f), eps_f, rng](const Vector& x) {
    return f(x) + eps_f * (2.0 * rng->Uniform() - 1.0);
  };
}

Corollary1Report VerifyCorollary1(InexactOracle& oracle, const Vector& center,
                                  double radius, int samples, uint64_t seed) {
  if (samples < 1) throw ConfigError("verify_corollary1: samples must be >= 1");
  Rng rng(seed);
  Corollary1Report report;
  report.alpha_eff = oracle.alpha_eff();
  const double alpha = report.alpha_eff;
  // 1 - sqrt(1 - alpha^2), written to avoid cancellation.
  const double angle_slack = alpha * alpha / (1.0 + std::sqrt(1.0 - alpha * alpha));
  for (int i = 0; i < samples; ++i) {
    const Vector z = center + radius * rng.Gaussian(oracle.dimension());
    const InexactOracle::Emission e = oracle.QueryWithExact(z);
    ++report.samples;
    const double gn = e.exact.norm();
    if (gn == 0.0) continue;
    const double tn = e.noisy.norm();
    const double err = (e.noisy - e.exact).norm();
    const double ratio = err / gn;
    report.max_ratio = std::max(report.max_ratio, ratio);
    report.max_bound_violation =
        std::max(report.max_bound_violation, ratio - alpha);
    report.max_sandwich_violation =
        std::max({report.max_sandwich_violation, (1.0 - alpha) - tn / gn,
                  tn / gn - (1.0 + alpha)});
    // 1 - cos(g~, g) from the error norm: exact emissions give exactly 0.
    const double one_minus_cos =
        tn > 0.0 ? (err * err - (tn - gn) * (tn - gn)) / (2.0 * tn * gn) : 1.0;
    report.max_angle_violation =
        std::max(report.max_angle_violation, one_minus_cos - angle_slack);
  }
  return report;
}

}  // namespace ifom
