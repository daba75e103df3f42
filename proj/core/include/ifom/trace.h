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

// Per-iteration run records and their CSV form.

#ifndef IFOM_TRACE_H_
#define IFOM_TRACE_H_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ifom/types.h"

namespace ifom {

enum class RunStatus { kCompleted, kDiverged };

const char* StatusName(RunStatus status);

struct TraceRow {
  int64_t k = 0;
  double gap = 0.0;        // f(x^k) - f*
  double grad_norm = 0.0;  // |grad f(x^k)|, exact
  double dist = 0.0;       // |x^k - x*|
  int64_t calls = 0;       // oracle calls so far
  // Theoretical envelope at k; NaN when none applies.
  double envelope = std::numeric_limits<double>::quiet_NaN();
};

struct Trace {
  std::string algorithm;
  RunStatus status = RunStatus::kCompleted;
  std::vector<TraceRow> rows;
  Vector final_iterate;

  std::vector<double> Gaps() const;
  std::vector<double> Distances() const;
};

struct SaddleTraceRow {
  int64_t k = 0;
  double dist2 = 0.0;      // |z^k - z*|^2
  double lyapunov = 0.0;   // |x^k - x*|^2 / eta_x + |y^k - y*|^2 / eta_y
  double opnorm = 0.0;     // |g(z^k)|, exact
  int64_t calls = 0;
};

struct SaddleTrace {
  std::string algorithm;
  RunStatus status = RunStatus::kCompleted;
  std::vector<SaddleTraceRow> rows;
  Vector final_iterate;

  std::vector<double> SquaredDistances() const;
};

// Shortest decimal form that parses back to the same double; "nan", "inf"
// and "-inf" for non-finite values. Deterministic across platforms.
std::string FormatDouble(double value);

// Header k,gap,grad_norm,dist,calls,envelope; empty envelope cells when NaN.
std::string ToCsv(const Trace& trace);
// Header k,dist2,lyapunov,opnorm,calls.
std::string ToCsv(const SaddleTrace& trace);

}  // namespace ifom

#endif  // IFOM_TRACE_H_
