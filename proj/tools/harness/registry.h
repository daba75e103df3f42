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

// Name -> constructor tables for problems, noise policies and algorithms,
// plus the theoretical constants reported next to every run.

#ifndef IFOM_TOOLS_HARNESS_REGISTRY_H_
#define IFOM_TOOLS_HARNESS_REGISTRY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "harness/config.h"
#include "ifom/oracles.h"
#include "ifom/probe.h"
#include "ifom/problems.h"
#include "ifom/trace.h"

namespace ifom::harness {

using Problem = std::variant<MinProblem, SaddleProblem>;

// nesterov_worst, random_quadratic, logistic, epsilon_saddle,
// coupled_quadratic_saddle. Unknown names or parameters are ConfigErrors.
Problem MakeProblem(const NamedSpec& spec);

std::vector<std::string> ProblemNames();
std::vector<std::string> AlgorithmNames();

bool IsMinAlgorithm(const std::string& name);
bool IsSaddleAlgorithm(const std::string& name);

NoisePolicy MakePolicy(const NoiseSpec& spec, uint64_t seed);

// Everything the run needs besides the oracle, resolved from the config and
// the problem constants.
struct ResolvedAlgorithm {
  std::string name;
  double alpha = 0.0;  // relative noise bound used by the theory
  // Saddle steps.
  double eta_x = 0.0;
  double eta_y = 0.0;
  double c = 0.0;  // extragradient eta = 1/(cL)
  // Min-solver options.
  std::optional<double> gd_step;
  bool envelope_mode = true;
  std::optional<double> mu_alg;
  // Per-step theoretical factor on the measured quantity (gap for
  // minimization, |z - z*|^2 for saddles) and whether theory predicts
  // convergence at this noise level.
  std::optional<double> rho_theory;
  bool convergence_expected = false;
  // Flat name -> value map written into report.json.
  Json theory = Json::object();
};

ResolvedAlgorithm ResolveAlgorithm(const RunConfig& config,
                                   const Problem& problem,
                                   double alpha_eff);

// Starting point: algorithm.params.start as a list, "zero", "ones", or the
// default (zero for minimization, the scan start for saddles).
Vector ResolveStart(const RunConfig& config, const Problem& problem);

// Constants of the problem for report.json.
Json ProblemSummary(const Problem& problem);

}  // namespace ifom::harness

#endif  // IFOM_TOOLS_HARNESS_REGISTRY_H_
