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

// Closed-form step sizes, contraction factors and robustness thresholds, the
// theoretical envelopes traces are checked against, and log-linear rate
// fitting. Everything here is a pure function.

#ifndef IFOM_RATES_H_
#define IFOM_RATES_H_

#include <optional>
#include <string>
#include <vector>

namespace ifom {

// ---- Accelerated method under relative noise ----

// 1 - (1/(10 sqrt 2)) (mu/L)^(1/2 + tau).
double ReagmEnvelopeFactor(double lip, double mu, double tau);
// L R^2 factor^k for k = 0..n.
std::vector<double> ReagmEnvelope(double lip, double mu, double tau, double r,
                                  int n);
// The noise level tied to tau: alpha = (1/3) (mu/L)^(1/2 - tau).
double ReagmAlphaForTau(double lip, double mu, double tau);
// The tau whose schedule value equals alpha, clamped to 0 below the tau = 0
// level. Empty when alpha exceeds the tau = 1/2 level of 1/3.
std::optional<double> ReagmTauForAlpha(double lip, double mu, double alpha);
// Noise ceiling (sqrt 2 - 1)/(18 sqrt 2) sqrt(mu/L) of the optimal-rate
// guarantee.
double ReagmOptimalRateAlpha(double lip, double mu);

// ---- Simultaneous GDA ----

// eta = (mu - alpha L) / ((1 + alpha)^2 L^2); empty when alpha >= mu/L, where
// no constant step gives a linear rate.
std::optional<double> SimGdaStep(double mu, double lip, double alpha);
// 1 - 2 (mu - alpha L) eta + (1 + alpha)^2 L^2 eta^2 on |z - z*|^2.
double SimGdaContraction(double mu, double lip, double alpha, double eta);
// mu / L.
double SimGdaThreshold(double mu, double lip);
// (L/mu)^2 (1 - alpha L/mu)^-2 ln(R / eps), the iteration bound without its
// hidden constant.
double SimGdaIterationBound(double mu, double lip, double alpha, double r,
                            double eps);

// ---- Alternating GDA ----

// 1 - 2 (mu - sqrt2 alpha L) eta + 4 (1+alpha)^2 L^2 eta^2
//   + (1+alpha)^4 L^4 eta^4 on |z - z*|^2.
double AltGdaContraction(double mu, double lip, double alpha, double eta);
// The stationary point of the quartic above via Cardano's formula; empty
// when alpha >= mu / (sqrt 2 L).
std::optional<double> AltGdaStep(double mu, double lip, double alpha);
// mu / (sqrt 2 L).
double AltGdaThreshold(double mu, double lip);

// ---- Strongly-convex-strongly-concave GDA with separate constants ----

struct ScscResult {
  double alpha_max = 0.0;
  // Step of the active branch evaluated at alpha_max.
  double step = 0.0;
  // True when lip_xy^2 <= mu L / 2.
  bool weak_coupling = false;
};

// Right-hand side of the admissibility cubic alpha((1+alpha)^2 + alpha) < rhs.
double ScscRhs(double mu, double lip, double lip_xy, bool weak_coupling);
double ScscStep(double mu, double lip, double lip_xy, double alpha);
// 1 + alpha - mu eta + 2 ((1+alpha)^2 + alpha) lip_xy^2 eta^2 on the
// Lyapunov function.
double ScscContraction(double mu, double lip, double lip_xy, double alpha,
                       double eta);
// Largest admissible alpha by bisection (1e-12 absolute); 0 when rhs <= 0.
ScscResult ScscThreshold(double mu, double lip, double lip_xy);

// ---- Extragradient ----

struct EgThresholdResult {
  double c = 0.0;
  // Largest alpha with 3/c^3 + 2 a^2 k / c^2 - 1/c + 2 a^2 k <= 0, k = L/mu.
  double alpha_max = 0.0;
  bool feasible = false;
  // The remainder term at alpha_max.
  double xi = 0.0;
  // False when xi > 0.05: the dropped remainder is not negligible and the
  // asymptotic threshold should not be trusted.
  bool asymptotic_regime = false;
};

// sqrt((1/c - 3/c^3) / (2k (1/c^2 + 1))); infeasible (0) for c <= sqrt 3.
EgThresholdResult EgThreshold(double mu, double lip, double c);
// EgThreshold at the c maximizing alpha_max over a grid on (sqrt 3, 20]
// refined by golden-section search.
EgThresholdResult EgBestThreshold(double mu, double lip);
// The remainder 6a^2/(1-a)^2 ((1-a)^2/c^2 + 1) + 3a^2/(1-a)^2 + 1/(ck).
double EgXi(double alpha, double c, double k);
// The coefficient of |z_half - z|^2 in the one-step bound with eta = 1/(cL),
// before any asymptotic simplification:
//   (eta a^2/mu + 3 eta^2 a^2)(2L^2 + 2/(eta^2 (1-a)^2)) + 3 eta^2 L^2
//   + 3 a^2/(1-a)^2 + eta mu - 1.
double EgExactMultiplier(double mu, double lip, double alpha, double c);
// Largest alpha keeping EgExactMultiplier <= 0 (bisection, 1e-12).
double EgExactThreshold(double mu, double lip, double c);
// 1 - mu / (2 c L) on |z - z*|^2.
double EgContraction(double mu, double lip, double c);

// ---- Empirical rates ----

enum class Verdict { kConverged, kDiverged, kInconclusive };
const char* VerdictName(Verdict verdict);

struct RateFit {
  // exp(slope) of the least-squares line through log(value) vs k over the
  // tail half of the usable prefix; 0 for exact convergence, NaN when
  // fewer than 2 points are usable.
  double rho = 0.0;
  // RMS residual of that line in log units.
  double residual = 0.0;
  // Standard error of the fitted slope (log units per iteration).
  double slope_stderr = 0.0;
  int points = 0;
  // Length of the prefix the tail half was taken from.
  int usable = 0;
};

// The usable prefix ends at the first non-positive or non-finite entry, or
// at the first entry below floor_ratio times the first entry (the roundoff
// floor of the measured quantity).
RateFit FitRate(const std::vector<double>& values, double floor_ratio = 1e-24);

// Diverged if the run aborted or rho > 1. Converged if rho < 1 - tolerance
// holds with the slope taken three standard errors pessimistic, so bounded
// oscillations with a slightly negative fitted slope do not count.
// Inconclusive otherwise.
Verdict Classify(const RateFit& fit, bool aborted, double tolerance);

struct RateReport {
  std::string algorithm;
  double mu = 0.0;
  double lip = 0.0;
  std::optional<double> lip_xy;
  double alpha = 0.0;
  std::optional<double> step;
  // Theoretical per-step factor; empty when the theory gives none.
  std::optional<double> rho_theory;
  std::optional<double> alpha_threshold;
  RateFit fit;
  Verdict verdict = Verdict::kInconclusive;
};

}  // namespace ifom

#endif  // IFOM_RATES_H_
