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

#include "harness/registry.h"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "ifom/min_solvers.h"
#include "ifom/rates.h"
#include "ifom/types.h"

namespace ifom::harness {
namespace {

const std::set<std::string> kMinAlgorithms = {"reagm", "stm", "gd"};
const std::set<std::string> kSaddleAlgorithms = {"sim-gda", "alt-gda", "eg"};

// Rejects parameters a constructor does not know, so typos fail loudly.
void CheckKeys(const NamedSpec& spec, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : spec.params.items()) {
    if (!allowed.count(key)) {
      throw ConfigError(spec.name + ": unknown parameter '" + key + "'");
    }
  }
}

double Num(const Json& params, const char* key, double fallback) {
  if (!params.contains(key)) return fallback;
  if (!params.at(key).is_number()) {
    throw ConfigError(std::string("parameter '") + key + "' must be a number");
  }
  return params.at(key).get<double>();
}

int Int(const Json& params, const char* key, int fallback) {
  const double v = Num(params, key, fallback);
  if (v != std::floor(v)) {
    throw ConfigError(std::string("parameter '") + key + "' must be an integer");
  }
  return static_cast<int>(v);
}

Json Optional(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Problem MakeProblem(const NamedSpec& spec) {
  const Json& p = spec.params;
  if (spec.name == "nesterov_worst") {
    CheckKeys(spec, {"d", "mu", "kappa"});
    return NesterovWorst(Int(p, "d", 100), Num(p, "mu", 1.0),
                         Num(p, "kappa", 100.0));
  }
  if (spec.name == "random_quadratic") {
    CheckKeys(spec, {"d", "mu", "lip", "seed"});
    return RandomQuadratic(Int(p, "d", 20), Num(p, "mu", 1.0),
                           Num(p, "lip", 100.0), Int(p, "seed", 0));
  }
  if (spec.name == "logistic") {
    CheckKeys(spec, {"n", "d", "lambda", "seed"});
    return RegularizedLogistic(Int(p, "n", 200), Int(p, "d", 10),
                               Num(p, "lambda", 0.01), Int(p, "seed", 0));
  }
  if (spec.name == "epsilon_saddle") {
    CheckKeys(spec, {"eps"});
    return EpsilonSaddle(Num(p, "eps", 0.1));
  }
  if (spec.name == "coupled_quadratic_saddle") {
    CheckKeys(spec, {"mu_x", "mu_y", "lip_x", "lip_y", "lip_xy", "dx", "dy",
                     "seed", "linear_scale"});
    CoupledQuadraticSpec s;
    s.mu_x = Num(p, "mu_x", s.mu_x);
    s.mu_y = Num(p, "mu_y", s.mu_y);
    s.lip_x = Num(p, "lip_x", s.lip_x);
    s.lip_y = Num(p, "lip_y", s.lip_y);
    s.lip_xy = Num(p, "lip_xy", s.lip_xy);
    s.dx = Int(p, "dx", s.dx);
    s.dy = Int(p, "dy", s.dy);
    s.seed = Int(p, "seed", 0);
    s.linear_scale = Num(p, "linear_scale", 0.0);
    return CoupledQuadraticSaddle(s);
  }
  throw ConfigError("unknown problem '" + spec.name + "'");
}

std::vector<std::string> ProblemNames() {
  return {"nesterov_worst", "random_quadratic", "logistic", "epsilon_saddle",
          "coupled_quadratic_saddle"};
}

std::vector<std::string> AlgorithmNames() {
  return {"reagm", "stm", "gd", "sim-gda", "alt-gda", "eg"};
}

bool IsMinAlgorithm(const std::string& name) {
  return kMinAlgorithms.count(name) > 0;
}

bool IsSaddleAlgorithm(const std::string& name) {
  return kSaddleAlgorithms.count(name) > 0;
}

NoisePolicy MakePolicy(const NoiseSpec& spec, uint64_t seed) {
  if (spec.policy == "exact") return ExactPolicy{};
  if (spec.policy == "sphere") return SpherePolicy{spec.alpha, seed};
  if (spec.policy == "mantissa") return MantissaPolicy{spec.bits};
  if (spec.policy == "adv-rotation") return RotationPolicy{};
  if (spec.policy == "adv-greedy") {
    GreedyPolicy greedy;
    greedy.alpha = spec.alpha;
    greedy.grid_points = spec.grid_points;
    return greedy;
  }
  throw ConfigError("unknown noise policy '" + spec.policy + "'");
}

ResolvedAlgorithm ResolveAlgorithm(const RunConfig& config,
                                   const Problem& problem, double alpha_eff) {
  const NamedSpec& spec = config.algorithm;
  const Json& p = spec.params;
  ResolvedAlgorithm r;
  r.name = spec.name;
  r.alpha = Num(p, "alpha", alpha_eff);
  const bool is_min = std::holds_alternative<MinProblem>(problem);
  if (!IsMinAlgorithm(spec.name) && !IsSaddleAlgorithm(spec.name)) {
    throw ConfigError("unknown algorithm '" + spec.name + "'");
  }
  if (IsMinAlgorithm(spec.name) != is_min) {
    throw ConfigError("algorithm '" + spec.name +
                      "' does not apply to problem '" + config.problem.name +
                      "'");
  }
  Json& t = r.theory;
  t["alpha"] = r.alpha;

  if (is_min) {
    const MinProblem& mp = std::get<MinProblem>(problem);
    const double mu = mp.mu, lip = mp.lip;
    if (spec.name == "reagm") {
      CheckKeys(spec, {"alpha", "envelope_mode", "mu_alg", "start"});
      r.envelope_mode =
          p.contains("envelope_mode") ? p.at("envelope_mode").get<bool>()
                                      : config.envelope;
      if (p.contains("mu_alg")) r.mu_alg = Num(p, "mu_alg", mu);
      const double mu_alg = r.envelope_mode ? mu / 2 : r.mu_alg.value_or(mu);
      const ReagmConstants c = ComputeReagmConstants(lip, mu_alg, r.alpha);
      t["mu_alg"] = mu_alg;
      t["h"] = c.h;
      t["l_hat"] = c.l_hat;
      t["s"] = c.s;
      t["m"] = c.m;
      t["q"] = c.q;
      t["a"] = c.a;
      const auto tau = ReagmTauForAlpha(lip, mu, r.alpha);
      t["tau"] = Optional(tau);
      t["optimal_rate_alpha"] = ReagmOptimalRateAlpha(lip, mu);
      if (tau && r.envelope_mode) {
        r.rho_theory = ReagmEnvelopeFactor(lip, mu, *tau);
        r.convergence_expected = true;
      }
    } else if (spec.name == "stm") {
      CheckKeys(spec, {"start"});
      t["mu_hat"] = mu / 2;
      t["alpha_1_exact"] = StmStepCoefficient(lip, 0.0, 1.0 / lip);
      r.convergence_expected = r.alpha == 0.0;
    } else {
      CheckKeys(spec, {"alpha", "step", "start"});
      if (p.contains("step")) r.gd_step = Num(p, "step", 0.0);
      const double h = r.gd_step.value_or(NoiseCorrectedStep(lip, r.alpha));
      t["h"] = h;
      t["l_hat"] = NoiseCorrectedLipschitz(lip, r.alpha);
      if (r.alpha < 1.0 && h <= NoiseCorrectedStep(lip, r.alpha)) {
        // Each step removes |grad f|^2 / (2 L_hat) >= mu/L_hat of the gap.
        r.rho_theory = 1.0 - mu / NoiseCorrectedLipschitz(lip, r.alpha);
        r.convergence_expected = true;
      }
    }
    t["rho_theory"] = Optional(r.rho_theory);
    t["convergence_expected"] = r.convergence_expected;
    return r;
  }

  const SaddleProblem& sp = std::get<SaddleProblem>(problem);
  const double mu = sp.mu, lip = sp.lip;
  CheckKeys(spec, {"alpha", "eta", "eta_x", "eta_y", "c", "start"});
  if (spec.name == "eg") {
    const EgThresholdResult best = EgBestThreshold(mu, lip);
    r.c = Num(p, "c", 3.0);
    const EgThresholdResult at_c = EgThreshold(mu, lip, r.c);
    const double exact = EgExactThreshold(mu, lip, r.c);
    r.eta_x = r.eta_y = Num(p, "eta", 1.0 / (r.c * lip));
    t["c"] = r.c;
    t["eta"] = r.eta_x;
    t["alpha_max_asymptotic"] = at_c.alpha_max;
    t["alpha_max_best_c"] = best.alpha_max;
    t["best_c"] = best.c;
    t["alpha_max_over_sqrt_mu_over_l"] = best.alpha_max / std::sqrt(mu / lip);
    t["alpha_max_exact"] = exact;
    t["xi"] = at_c.xi;
    t["asymptotic_regime"] = at_c.asymptotic_regime;
    if (!p.contains("eta") && r.alpha <= exact) {
      r.rho_theory = EgContraction(mu, lip, r.c);
      r.convergence_expected = true;
    }
  } else if (spec.name == "sim-gda") {
    const auto step = SimGdaStep(mu, lip, r.alpha);
    const double fallback = step.value_or(*SimGdaStep(mu, lip, 0.0));
    r.eta_x = Num(p, "eta_x", Num(p, "eta", fallback));
    r.eta_y = Num(p, "eta_y", Num(p, "eta", fallback));
    t["alpha_threshold"] = SimGdaThreshold(mu, lip);
    t["step_theory"] = Optional(step);
    if (r.eta_x == r.eta_y) {
      const double rho = SimGdaContraction(mu, lip, r.alpha, r.eta_x);
      r.rho_theory = rho;
      r.convergence_expected = rho < 1.0;
    }
  } else {
    const auto step = AltGdaStep(mu, lip, r.alpha);
    const double fallback = step.value_or(*AltGdaStep(mu, lip, 0.0));
    r.eta_x = Num(p, "eta_x", Num(p, "eta", fallback));
    r.eta_y = Num(p, "eta_y", Num(p, "eta", fallback));
    t["alpha_threshold"] = AltGdaThreshold(mu, lip);
    t["step_theory"] = Optional(step);
    if (r.eta_x == r.eta_y) {
      const double rho = AltGdaContraction(mu, lip, r.alpha, r.eta_x);
      r.rho_theory = rho;
      r.convergence_expected = rho < 1.0;
    }
  }
  if (spec.name != "eg") {
    t["eta_x"] = r.eta_x;
    t["eta_y"] = r.eta_y;
    const ScscResult scsc = ScscThreshold(mu, lip, sp.lip_xy);
    t["scsc_alpha_max"] = scsc.alpha_max;
    t["scsc_step"] = scsc.step;
    t["scsc_weak_coupling"] = scsc.weak_coupling;
  }
  t["rho_theory"] = Optional(r.rho_theory);
  t["convergence_expected"] = r.convergence_expected;
  return r;
}

Vector ResolveStart(const RunConfig& config, const Problem& problem) {
  const int d = std::visit(
      [](const auto& p) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, MinProblem>) {
          return p.dimension;
        } else {
          return p.dimension();
        }
      },
      problem);
  const Json& p = config.algorithm.params;
  if (p.contains("start")) {
    const Json& s = p.at("start");
    if (s.is_string()) {
      if (s == "zero") return Vector::Zero(d);
      if (s == "ones") return Vector::Ones(d);
      throw ConfigError("start must be \"zero\", \"ones\" or a list");
    }
    const auto values = s.get<std::vector<double>>();
    if (static_cast<int>(values.size()) != d) {
      throw ConfigError("start has the wrong dimension");
    }
    return Eigen::Map<const Vector>(values.data(), d);
  }
  if (const auto* sp = std::get_if<SaddleProblem>(&problem)) {
    return DefaultScanStart(*sp);
  }
  return Vector::Zero(d);
}

Json ProblemSummary(const Problem& problem) {
  Json j;
  if (const auto* mp = std::get_if<MinProblem>(&problem)) {
    j["name"] = mp->name;
    j["dimension"] = mp->dimension;
    j["mu"] = mp->mu;
    j["lip"] = mp->lip;
    j["optimal_value"] = mp->optimal_value;
    return j;
  }
  const SaddleProblem& sp = std::get<SaddleProblem>(problem);
  j["name"] = sp.name;
  j["dx"] = sp.dx;
  j["dy"] = sp.dy;
  j["mu"] = sp.mu;
  j["lip"] = sp.lip;
  j["mu_x"] = sp.mu_x;
  j["mu_y"] = sp.mu_y;
  j["lip_x"] = sp.lip_x;
  j["lip_y"] = sp.lip_y;
  j["lip_xy"] = sp.lip_xy;
  j["epsilon"] = sp.epsilon ? Json(*sp.epsilon) : Json(nullptr);
  return j;
}

}  // namespace ifom::harness
