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

// Experiment configuration: one JSON file per experiment.
//
//   {
//     "kind": "run",
//     "problem":   {"name": "nesterov_worst", "params": {"d": 100, ...}},
//     "algorithm": {"name": "reagm", "params": {...}},
//     "noise":     {"policy": "sphere", "alpha": 0.0333},
//     "iterations": 2000,
//     "seeds": [1, 2],
//     "envelope": true
//   }
//
// "sweep" adds {"sweep": {"param": "noise.alpha", "values": [...]}};
// "probe" adds an optional {"scan": {...}} block.

#ifndef IFOM_TOOLS_HARNESS_CONFIG_H_
#define IFOM_TOOLS_HARNESS_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ifom::harness {

using Json = nlohmann::json;

enum class ExperimentKind { kRun, kSweep, kProbe, kReport, kVerify };

ExperimentKind ParseKind(const std::string& name);
std::string KindName(ExperimentKind kind);

struct NamedSpec {
  std::string name;
  Json params = Json::object();
};

struct NoiseSpec {
  // exact | sphere | mantissa | adv-rotation | adv-greedy
  std::string policy = "exact";
  double alpha = 0.0;
  int bits = 52;
  int grid_points = 256;
};

struct SweepSpec {
  // Dotted path of the swept value: "noise.alpha", "noise.bits",
  // "iterations" or "algorithm.<param>" / "problem.<param>".
  std::string param;
  std::vector<double> values;
};

struct ScanSpec {
  std::vector<double> alpha_grid;
  std::vector<double> step_grid;
  int alpha_points = 32;
  int step_points = 64;
  std::optional<double> tolerance;
  int grid_points = 256;
};

struct RunConfig {
  ExperimentKind kind = ExperimentKind::kRun;
  NamedSpec problem;
  NamedSpec algorithm;
  NoiseSpec noise;
  int iterations = 1000;
  std::vector<uint64_t> seeds = {1};
  std::string output_dir;
  bool envelope = true;
  bool plot = true;
  // Overrides the theory-based expectation used for exit code 3.
  std::optional<bool> expect_convergence;
  std::optional<int> jobs;
  SweepSpec sweep;
  ScanSpec scan;
  // The raw bytes the config was parsed from and their content hash.
  std::string source;
  std::string hash;
};

// Parses and validates; throws ConfigError with a readable message.
RunConfig ParseConfig(const std::string& text);
RunConfig LoadConfig(const std::string& path);

// Git blob hash: sha1("blob <size>\0" + content), lowercase hex.
std::string ContentHash(const std::string& content);

}  // namespace ifom::harness

#endif  // IFOM_TOOLS_HARNESS_CONFIG_H_
