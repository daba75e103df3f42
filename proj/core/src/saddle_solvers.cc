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

#include "ifom/saddle_solvers.h"

#include <string>
#include <utility>

namespace ifom {
namespace {

constexpr double kDivergenceFactor = 1e6;

class Recorder {
 public:
  Recorder(FieldFn field, Vector solution, int dx, double eta_x, double eta_y,
           std::string algorithm)
      : field_(std::move(field)),
        solution_(std::move(solution)),
        dx_(dx),
        eta_x_(eta_x),
        eta_y_(eta_y) {
    trace_.algorithm = std::move(algorithm);
  }

  bool Record(int64_t k, const Vector& z, int64_t calls) {
    trace_.final_iterate = z;
    if (!z.allFinite()) {
      trace_.status = RunStatus::kDiverged;
      return false;
    }
    const Vector diff = z - solution_;
    const int dy = static_cast<int>(z.size()) - dx_;
    SaddleTraceRow row;
    row.k = k;
    row.dist2 = diff.squaredNorm();
    row.lyapunov = diff.head(dx_).squaredNorm() / eta_x_ +
                   diff.tail(dy).squaredNorm() / eta_y_;
    row.opnorm = field_(z).norm();
    row.calls = calls;
    if (trace_.rows.empty()) initial_ = row.dist2;
    trace_.rows.push_back(row);
    if (initial_ > 0.0 && row.dist2 > kDivergenceFactor * initial_) {
      trace_.status = RunStatus::kDiverged;
      return false;
    }
    return true;
  }

  SaddleTrace Finish() { return std::move(trace_); }

 private:
  FieldFn field_;
  Vector solution_;
  int dx_;
  double eta_x_;
  double eta_y_;
  SaddleTrace trace_;
  double initial_ = 0.0;
};

void CheckRun(int dimension, const InexactOracle& oracle,
              const Vector& z_start, double eta_x, double eta_y,
              int iterations) {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (!(eta_x > 0.0 && eta_y > 0.0)) throw ConfigError("steps must be > 0");
  if (z_start.size() != dimension || oracle.dimension() != dimension) {
    throw ConfigError("dimension mismatch between problem, oracle and start");
  }
}

FieldFn StackedFieldOf(const SaddleProblem& sp) {
  return [&sp](const Vector& z) { return sp.StackedField(z); };
}

}  // namespace

SaddleTrace SimGdaRun(const SaddleProblem& sp, InexactOracle& oracle,
                      const Vector& z_start, double eta_x, double eta_y,
                      int iterations) {
  CheckRun(sp.dimension(), oracle, z_start, eta_x, eta_y, iterations);
  Recorder recorder(StackedFieldOf(sp), sp.Solution(), sp.dx, eta_x, eta_y,
                    "sim-gda");
  Vector steps(sp.dimension());
  steps.head(sp.dx).setConstant(eta_x);
  steps.tail(sp.dy).setConstant(eta_y);
  Vector z = z_start;
  if (!recorder.Record(0, z, oracle.call_count())) return recorder.Finish();
  for (int k = 0; k < iterations; ++k) {
    StepHint hint;
    if (oracle.wants_hint()) {
      hint.base = &z;
      hint.steps = steps;
    }
    // The stacked vector already carries -grad_y, so both blocks descend.
    z -= steps.cwiseProduct(oracle.Query(z, hint));
    if (!recorder.Record(k + 1, z, oracle.call_count())) break;
  }
  return recorder.Finish();
}

SaddleTrace AltGdaRun(const SaddleProblem& sp, InexactOracle& oracle,
                      const Vector& z_start, double eta_x, double eta_y,
                      int iterations) {
  CheckRun(sp.dimension(), oracle, z_start, eta_x, eta_y, iterations);
  Recorder recorder(StackedFieldOf(sp), sp.Solution(), sp.dx, eta_x, eta_y,
                    "alt-gda");
  const int dx = sp.dx;
  const int dy = sp.dy;
  Vector z = z_start;
  if (!recorder.Record(0, z, oracle.call_count())) return recorder.Finish();
  for (int k = 0; k < iterations; ++k) {
    StepHint hint_x;
    if (oracle.wants_hint()) hint_x = StepHint::Block(z, eta_x, 0, dx);
    const Vector gx = oracle.Query(z, hint_x);
    z.head(dx) -= eta_x * gx.head(dx);
    StepHint hint_y;
    if (oracle.wants_hint()) hint_y = StepHint::Block(z, eta_y, dx, dy);
    const Vector gy = oracle.Query(z, hint_y);
    z.tail(dy) -= eta_y * gy.tail(dy);
    if (!recorder.Record(k + 1, z, oracle.call_count())) break;
  }
  return recorder.Finish();
}

SaddleTrace EgRun(const OperatorProblem& op, InexactOracle& oracle,
                  const Vector& z_start, double eta, int iterations) {
  CheckRun(op.dimension, oracle, z_start, eta, eta, iterations);
  Recorder recorder(op.field, op.solution, op.dimension, eta, eta, "eg");
  Vector z = z_start;
  if (!recorder.Record(0, z, oracle.call_count())) return recorder.Finish();
  for (int k = 0; k < iterations; ++k) {
    StepHint hint_half;
    if (oracle.wants_hint()) {
      hint_half = StepHint::Descent(z, eta);
      hint_half.extragradient = true;
    }
    const Vector half = z - eta * oracle.Query(z, hint_half);
    StepHint hint_full;
    if (oracle.wants_hint()) hint_full = StepHint::Descent(z, eta);
    z -= eta * oracle.Query(half, hint_full);
    if (!recorder.Record(k + 1, z, oracle.call_count())) break;
  }
  return recorder.Finish();
}

}  // namespace ifom
