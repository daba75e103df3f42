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

#include "ifom/trace.h"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace ifom {

const char* StatusName(RunStatus status) {
  return status == RunStatus::kCompleted ? "completed" : "diverged";
}

std::vector<double> Trace::Gaps() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const TraceRow& row : rows) out.push_back(row.gap);
  return out;
}

std::vector<double> Trace::Distances() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const TraceRow& row : rows) out.push_back(row.dist);
  return out;
}

std::vector<double> SaddleTrace::SquaredDistances() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const SaddleTraceRow& row : rows) out.push_back(row.dist2);
  return out;
}

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string ToCsv(const Trace& trace) {
  std::string out = "k,gap,grad_norm,dist,calls,envelope\n";
  for (const TraceRow& row : trace.rows) {
    out += std::to_string(row.k) + ',' + FormatDouble(row.gap) + ',' +
           FormatDouble(row.grad_norm) + ',' + FormatDouble(row.dist) + ',' +
           std::to_string(row.calls) + ',';
    if (!std::isnan(row.envelope)) out += FormatDouble(row.envelope);
    out += '\n';
  }
  return out;
}

std::string ToCsv(const SaddleTrace& trace) {
  std::string out = "k,dist2,lyapunov,opnorm,calls\n";
  for (const SaddleTraceRow& row : trace.rows) {
    out += std::to_string(row.k) + ',' + FormatDouble(row.dist2) + ',' +
           FormatDouble(row.lyapunov) + ',' + FormatDouble(row.opnorm) + ',' +
           std::to_string(row.calls) + '\n';
  }
  return out;
}

}  // namespace ifom
