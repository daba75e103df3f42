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

#include "ifom/rates.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace ifom {
namespace {

constexpr double kBisectionTolerance = 1e-12;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

// Largest x in [lo, hi] with ok(x), assuming ok is monotone (true then
// false) and ok(lo) holds.
double BisectLargest(double lo, double hi, const std::function<bool(double)>& ok) {
  if (ok(hi)) return hi;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

double ReagmEnvelopeFactor(double lip, double mu, double tau) {
  return 1.0 - std::pow(mu / lip, 0.5 + tau) / (10.0 * std::sqrt(2.0));
}

std::vector<double> ReagmEnvelope(double lip, double mu, double tau, double r,
                                  int n) {
  const double factor = ReagmEnvelopeFactor(lip, mu, tau);
  std::vector<double> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = lip * r * r * std::pow(factor, k);
  return out;
}

double ReagmAlphaForTau(double lip, double mu, double tau) {
  return std::pow(mu / lip, 0.5 - tau) / 3.0;
}

std::optional<double> ReagmTauForAlpha(double lip, double mu, double alpha) {
  if (alpha > 1.0 / 3.0) return std::nullopt;
  if (alpha <= ReagmAlphaForTau(lip, mu, 0.0) || mu >= lip) return 0.0;
  const double tau = 0.5 - std::log(3.0 * alpha) / std::log(mu / lip);
  return std::clamp(tau, 0.0, 0.5);
}

double ReagmOptimalRateAlpha(double lip, double mu) {
  return (std::sqrt(2.0) - 1.0) / (18.0 * std::sqrt(2.0)) * std::sqrt(mu / lip);
}

std::optional<double> SimGdaStep(double mu, double lip, double alpha) {
  if (alpha * lip >= mu) return std::nullopt;
  return (mu - alpha * lip) / ((1.0 + alpha) * (1.0 + alpha) * lip * lip);
}

double SimGdaContraction(double mu, double lip, double alpha, double eta) {
  const double grow = (1.0 + alpha) * lip * eta;
  return 1.0 - 2.0 * (mu - alpha * lip) * eta + grow * grow;
}

double SimGdaThreshold(double mu, double lip) { return mu / lip; }

double SimGdaIterationBound(double mu, double lip, double alpha, double r,
                            double eps) {
  const double slack = 1.0 - alpha * lip / mu;
  return (lip * lip) / (mu * mu) / (slack * slack) * std::log(r / eps);
}

double AltGdaContraction(double mu, double lip, double alpha, double eta) {
  const double t = (1.0 + alpha) * lip * eta;
  return 1.0 - 2.0 * (mu - std::sqrt(2.0) * alpha * lip) * eta + 4.0 * t * t +
         t * t * t * t;
}

std::optional<double> AltGdaStep(double mu, double lip, double alpha) {
  if (alpha >= AltGdaThreshold(mu, lip)) return std::nullopt;
  const double s = (mu / (std::sqrt(2.0) * lip) - alpha) /
                   (2.0 * std::sqrt(2.0) * (1.0 + alpha));
  const double root = std::sqrt(8.0 / 27.0 + s * s);
  const double t = std::cbrt(s + root) + std::cbrt(s - root);
  return t / (lip * (1.0 + alpha));
}

double AltGdaThreshold(double mu, double lip) {
  return mu / (std::sqrt(2.0) * lip);
}

double ScscRhs(double mu, double lip, double lip_xy, bool weak_coupling) {
  if (weak_coupling) {
    return mu / (2.0 * lip) - lip_xy * lip_xy / (2.0 * lip * lip);
  }
  return mu * mu / (8.0 * lip_xy * lip_xy);
}

double ScscStep(double mu, double lip, double lip_xy, double alpha) {
  const double w = (1.0 + alpha) * (1.0 + alpha) + alpha;
  if (lip_xy * lip_xy <= mu * lip / 2.0) return 1.0 / (2.0 * w * lip);
  return mu / (4.0 * w * lip_xy * lip_xy);
}

double ScscContraction(double mu, double lip, double lip_xy, double alpha,
                       double eta) {
  (void)lip;
  const double w = (1.0 + alpha) * (1.0 + alpha) + alpha;
  return 1.0 + alpha - mu * eta + 2.0 * w * lip_xy * lip_xy * eta * eta;
}

ScscResult ScscThreshold(double mu, double lip, double lip_xy) {
  ScscResult result;
  result.weak_coupling = lip_xy * lip_xy <= mu * lip / 2.0;
  const double rhs = ScscRhs(mu, lip, lip_xy, result.weak_coupling);
  if (rhs > 0.0) {
    const auto cubic = [](double a) { return a * ((1.0 + a) * (1.0 + a) + a); };
    result.alpha_max =
        BisectLargest(0.0, 1.0, [&](double a) { return cubic(a) < rhs; });
  }
  result.step = ScscStep(mu, lip, lip_xy, result.alpha_max);
  return result;
}

double EgXi(double alpha, double c, double k) {
  const double r = alpha * alpha / ((1.0 - alpha) * (1.0 - alpha));
  return 6.0 * r * ((1.0 - alpha) * (1.0 - alpha) / (c * c) + 1.0) + 3.0 * r +
         1.0 / (c * k);
}

EgThresholdResult EgThreshold(double mu, double lip, double c) {
  EgThresholdResult result;
  result.c = c;
  const double k = lip / mu;
  const double slack = 1.0 / c - 3.0 / (c * c * c);
  if (slack > 0.0) {
    result.feasible = true;
    result.alpha_max = std::sqrt(slack / (2.0 * k * (1.0 / (c * c) + 1.0)));
  }
  result.xi = EgXi(result.alpha_max, c, k);
  result.asymptotic_regime = result.feasible && result.xi <= 0.05;
  return result;
}

EgThresholdResult EgBestThreshold(double mu, double lip) {
  const double lo = std::sqrt(3.0);
  const double hi = 20.0;
  const int grid = 2000;
  const auto value = [&](double c) { return EgThreshold(mu, lip, c).alpha_max; };
  int best = 1;
  for (int i = 1; i <= grid; ++i) {
    if (value(lo + (hi - lo) * i / grid) > value(lo + (hi - lo) * best / grid)) {
      best = i;
    }
  }
  double a = lo + (hi - lo) * std::max(best - 1, 0) / grid;
  double b = lo + (hi - lo) * std::min(best + 1, grid) / grid;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  while (b - a > 1e-10) {
    const double c1 = b - inv_phi * (b - a);
    const double c2 = a + inv_phi * (b - a);
    if (value(c1) < value(c2)) {
      a = c1;
    } else {
      b = c2;
    }
  }
  return EgThreshold(mu, lip, 0.5 * (a + b));
}

double EgExactMultiplier(double mu, double lip, double alpha, double c) {
  const double eta = 1.0 / (c * lip);
  const double a2 = alpha * alpha;
  const double om2 = (1.0 - alpha) * (1.0 - alpha);
  return (eta * a2 / mu + 3.0 * eta * eta * a2) *
             (2.0 * lip * lip + 2.0 / (eta * eta * om2)) +
         3.0 * eta * eta * lip * lip + 3.0 * a2 / om2 + eta * mu - 1.0;
}

double EgExactThreshold(double mu, double lip, double c) {
  if (EgExactMultiplier(mu, lip, 0.0, c) > 0.0) return 0.0;
  return BisectLargest(0.0, 1.0 - 1e-9, [&](double a) {
    return EgExactMultiplier(mu, lip, a, c) <= 0.0;
  });
}

double EgContraction(double mu, double lip, double c) {
  return 1.0 - mu / (2.0 * c * lip);
}

const char* VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kConverged:
      return "converged";
    case Verdict::kDiverged:
      return "diverged";
    case Verdict::kInconclusive:
      break;
  }
  return "inconclusive";
}

RateFit FitRate(const std::vector<double>& values, double floor_ratio) {
  RateFit fit;
  const int n = static_cast<int>(values.size());
  if (n == 0) {
    fit.rho = kNaN;
    return fit;
  }
  const double first = values[0];
  if (first == 0.0) {
    fit.rho = 0.0;
    return fit;
  }
  int usable = 0;
  while (usable < n) {
    const double v = values[usable];
    if (!std::isfinite(v) || v <= 0.0 || v < floor_ratio * first) break;
    ++usable;
  }
  fit.usable = usable;
  if (usable < n && values[usable] == 0.0) {
    // Reached the solution exactly.
    fit.rho = 0.0;
    return fit;
  }
  const int start = usable / 2;
  const int m = usable - start;
  fit.points = m;
  if (m < 2) {
    fit.rho = kNaN;
    return fit;
  }
  double mean_k = 0.0;
  double mean_y = 0.0;
  for (int i = start; i < usable; ++i) {
    mean_k += i;
    mean_y += std::log(values[i]);
  }
  mean_k /= m;
  mean_y /= m;
  double skk = 0.0;
  double sky = 0.0;
  for (int i = start; i < usable; ++i) {
    const double dk = i - mean_k;
    skk += dk * dk;
    sky += dk * (std::log(values[i]) - mean_y);
  }
  const double slope = sky / skk;
  double sse = 0.0;
  for (int i = start; i < usable; ++i) {
    const double e = std::log(values[i]) - (mean_y + slope * (i - mean_k));
    sse += e * e;
  }
  fit.rho = std::exp(slope);
  fit.residual = std::sqrt(sse / m);
  fit.slope_stderr = m > 2 ? std::sqrt(sse / (m - 2) / skk) : 0.0;
  return fit;
}

Verdict Classify(const RateFit& fit, bool aborted, double tolerance) {
  if (aborted) return Verdict::kDiverged;
  if (std::isnan(fit.rho)) return Verdict::kInconclusive;
  if (fit.rho > 1.0) return Verdict::kDiverged;
  if (fit.rho == 0.0) return Verdict::kConverged;
  if (std::log(fit.rho) + 3.0 * fit.slope_stderr < std::log1p(-tolerance)) {
    return Verdict::kConverged;
  }
  return Verdict::kInconclusive;
}

}  // namespace ifom
