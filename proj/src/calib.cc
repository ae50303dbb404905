//
// Copyright 2026 The gaussdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "gaussdp/calib.h"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "gaussdp/errors.h"
#include "gaussdp/specfun.h"

namespace gaussdp {
namespace {

using specfun::Erfc;
using specfun::Erfcx;
using specfun::InverseErfc;

constexpr double kSqrt2 = std::numbers::sqrt2;

void CheckProfileArguments(double sigma, double epsilon,
                           const Sensitivity& sens) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("sigma must be positive, got " + std::to_string(sigma));
  }
  if (!(epsilon > 0.0)) {
    throw DomainError("epsilon must be positive, got " +
                      std::to_string(epsilon));
  }
  if (!(sens.l2() > 0.0)) {
    throw DomainError("privacy profile needs a positive sensitivity");
  }
}

void CheckTolerance(double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("tolerance must be positive, got " + std::to_string(tol));
  }
}

NoiseScale FromRoot(double root, const PrivacyBudget& budget,
                    const Sensitivity& sens, Mechanism kind) {
  return {SigmaFromRoot(root, budget.epsilon(), sens.l2()), kind};
}

// Bisection of a strictly decreasing function with f(lower) > 0 >= f(upper),
// following the termination rule of the DP-OPT algorithm: once the bracket
// is narrower than tol, the upper end is the answer.
CalibrationResult Bisect(const std::function<double(double)>& f, double lower,
                         double upper, double tol) {
  CalibrationResult result;
  result.bracket_low = lower;
  result.bracket_high = upper;
  std::int64_t n = 1;
  for (; n <= kMaxBisectionIterations; ++n) {
    if (upper - lower < tol) {
      result.root = upper;
      break;
    }
    const double mid = 0.5 * (lower + upper);
    if (mid <= lower || mid >= upper) {
      // Bracket collapsed to adjacent doubles.
      result.root = upper;
      break;
    }
    const double value = f(mid);
    if (value == 0.0) {
      result.root = mid;
      break;
    }
    if (value > 0.0) {
      lower = mid;
    } else {
      upper = mid;
    }
  }
  if (n > kMaxBisectionIterations) {
    throw ConvergenceError("bisection did not reach tolerance " +
                           std::to_string(tol) + " within " +
                           std::to_string(kMaxBisectionIterations) +
                           " iterations");
  }
  result.iterations = n - 1;
  result.residual = f(result.root);
  return result;
}

// Nudges sigma upwards by a few ulps until the profile certifies it. The
// solver already returns the noisier end of its final bracket; this covers
// the rounding of the root-to-sigma map.
double Certify(double sigma, double epsilon, double delta,
               const Sensitivity& sens,
               double (*profile)(double, double, const Sensitivity&)) {
  if (sens.l2() == 0.0) return sigma;
  for (int i = 0; i < 64 && profile(sigma, epsilon, sens) > delta; ++i) {
    sigma = std::nextafter(sigma, INFINITY);
  }
  return sigma;
}

}  // namespace

double SigmaFromRoot(double root, double epsilon, double l2) {
  const double r = std::sqrt(root * root + epsilon);
  const double numerator = root >= 0.0 ? root + r : epsilon / (r - root);
  return numerator * l2 / (epsilon * kSqrt2);
}

double Dwork2006Multiplier(double delta) {
  return std::sqrt(2.0 * std::log(2.0 / delta));
}

double Dwork2014Multiplier(double delta) {
  return std::sqrt(2.0 * std::log(1.25 / delta));
}

NoiseScale SigmaDwork2006(const PrivacyBudget& budget,
                          const Sensitivity& sens) {
  return {Dwork2006Multiplier(budget.delta()) * sens.l2() / budget.epsilon(),
          Mechanism::kDwork2006};
}

NoiseScale SigmaDwork2014(const PrivacyBudget& budget,
                          const Sensitivity& sens) {
  return {Dwork2014Multiplier(budget.delta()) * sens.l2() / budget.epsilon(),
          Mechanism::kDwork2014};
}

double DpDeltaProfile(double sigma, double epsilon, const Sensitivity& sens) {
  CheckProfileArguments(sigma, epsilon, sens);
  const double l2 = sens.l2();
  const double a = (epsilon * sigma / l2 - l2 / (2.0 * sigma)) / kSqrt2;
  const double w = (epsilon * sigma / l2 + l2 / (2.0 * sigma)) / kSqrt2;
  // w^2 - a^2 == epsilon, so e^eps erfc(w) == erfcx(w) exp(-a^2).
  return 0.5 * (Erfc(a) - Erfcx(w) * std::exp(-a * a));
}

double PdpDeltaProfile(double sigma, double epsilon, const Sensitivity& sens) {
  CheckProfileArguments(sigma, epsilon, sens);
  const double l2 = sens.l2();
  const double lambda = (epsilon * sigma / l2 - l2 / (2.0 * sigma)) / kSqrt2;
  const double w = (epsilon * sigma / l2 + l2 / (2.0 * sigma)) / kSqrt2;
  return 0.5 * (Erfc(lambda) + Erfc(w));
}

double DpOptResidual(double u, double epsilon, double delta) {
  const double w = std::sqrt(u * u + epsilon);
  return Erfc(u) - Erfcx(w) * std::exp(-u * u) - 2.0 * delta;
}

double PdpOptResidual(double u, double epsilon, double delta) {
  return Erfc(u) + Erfc(std::sqrt(u * u + epsilon)) - 2.0 * delta;
}

double Mech1Root(double epsilon, double delta) {
  const double tail = Erfcx(std::sqrt(epsilon));  // e^eps erfc(sqrt(eps))
  if (!(2.0 - tail > 2.0 * delta)) return 0.0;
  const double t = 2.0 * delta + tail;
  const double inner = InverseErfc(t);
  const double ratio =
      Erfcx(std::sqrt(inner * inner + epsilon)) * std::exp(-inner * inner) / t;
  return InverseErfc(2.0 * delta / (1.0 - ratio));
}

NoiseScale SigmaMech1(const PrivacyBudget& budget, const Sensitivity& sens) {
  return FromRoot(Mech1Root(budget.epsilon(), budget.delta()), budget, sens,
                  Mechanism::kMech1);
}

double Mech2Root(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw DomainError("Mechanism 2 requires delta < 0.5, got delta = " +
                      std::to_string(delta));
  }
  // 2 / (sqrt(16 delta + 1) - 1) == (sqrt(16 delta + 1) + 1) / (8 delta).
  const double r = std::sqrt(16.0 * delta + 1.0);
  return std::sqrt(std::log((r + 1.0) / 8.0) - std::log(delta));
}

NoiseScale SigmaMech2(const PrivacyBudget& budget, const Sensitivity& sens) {
  return FromRoot(Mech2Root(budget.delta()), budget, sens, Mechanism::kMech2);
}

CalibrationResult SolveDpOpt(const PrivacyBudget& budget,
                             const Sensitivity& sens, double tol) {
  CheckTolerance(tol);
  const double eps = budget.epsilon();
  const double delta = budget.delta();
  const auto f = [eps, delta](double u) {
    return DpOptResidual(u, eps, delta);
  };

  const double diff = 1.0 - Erfcx(std::sqrt(eps)) - 2.0 * delta;
  CalibrationResult result;
  if (diff == 0.0) {
    result.residual = f(0.0);
  } else if (diff > 0.0) {
    // Upper end: b of Mechanism 1, falling back to c of Mechanism 2 (valid
    // here because diff > 0 forces delta < 0.5) when rounding breaks b.
    double upper = 0.0;
    try {
      upper = Mech1Root(eps, delta);
    } catch (const DomainError&) {
      upper = 0.0;
    }
    if (!(upper > 0.0) || f(upper) > 0.0) upper = Mech2Root(delta);
    for (int i = 0; i < 64 && f(upper) > 0.0; ++i) upper *= 2.0;
    result = Bisect(f, 0.0, upper, tol);
  } else {
    // (2 - 2 delta) / (e^eps + 1) without overflow for large eps.
    const double q = std::exp(-eps);
    double arg = (2.0 - 2.0 * delta) * q / (1.0 + q);
    if (!(arg > 0.0)) arg = std::numeric_limits<double>::min();
    const double lower = -InverseErfc(arg);
    result = Bisect(f, lower, 0.0, tol);
  }
  result.noise = {
      Certify(SigmaFromRoot(result.root, eps, sens.l2()), eps, delta, sens,
              &DpDeltaProfile),
      Mechanism::kDpOpt};
  return result;
}

CalibrationResult SolvePdpOpt(const PrivacyBudget& budget,
                              const Sensitivity& sens, double tol) {
  CheckTolerance(tol);
  const double eps = budget.epsilon();
  const double delta = budget.delta();
  const auto f = [eps, delta](double u) {
    return PdpOptResidual(u, eps, delta);
  };
  CalibrationResult result =
      Bisect(f, InverseErfc(2.0 * delta), InverseErfc(delta), tol);
  result.noise = {
      Certify(SigmaFromRoot(result.root, eps, sens.l2()), eps, delta, sens,
              &PdpDeltaProfile),
      Mechanism::kPdpOpt};
  return result;
}

NoiseScale SigmaMech3(const PrivacyBudget& budget, const Sensitivity& sens) {
  return FromRoot(InverseErfc(budget.delta()), budget, sens,
                  Mechanism::kMech3);
}

double Mech4Root(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("Mechanism 4 requires 0 < delta < 1, got " +
                      std::to_string(delta));
  }
  // Same closed form as the seed of the inverse complementary error function.
  return specfun::InverseErfcSeed(delta);
}

NoiseScale SigmaMech4(const PrivacyBudget& budget, const Sensitivity& sens) {
  return FromRoot(Mech4Root(budget.delta()), budget, sens, Mechanism::kMech4);
}

NoiseScale DpOptZeroEpsilon(double delta, const Sensitivity& sens) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1), got " +
                      std::to_string(delta));
  }
  return {sens.l2() / (2.0 * kSqrt2 * specfun::InverseErf(delta)),
          Mechanism::kDpOpt};
}

double FailureThreshold(double multiplier, double delta, double tol) {
  if (!(multiplier > 0.0) || !std::isfinite(multiplier)) {
    throw DomainError("noise multiplier F(delta) must be positive");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1), got " +
                      std::to_string(delta));
  }
  CheckTolerance(tol);
  const Sensitivity unit(1.0);
  // Positive while the classical noise exceeds the optimum.
  const auto h = [&](double eps) {
    return multiplier / eps -
           SolveDpOpt(PrivacyBudget(eps, delta), unit).noise.sigma;
  };

  constexpr double kScanLow = 1e-3;
  constexpr int kStepsPerDecade = 16;
  constexpr int kSteps = 7 * kStepsPerDecade;
  double lo = kScanLow;
  double h_lo = h(lo);
  double hi = 0.0;
  for (int i = 1; i <= kSteps; ++i) {
    const double eps =
        kScanLow * std::pow(10.0, static_cast<double>(i) / kStepsPerDecade);
    const double value = h(eps);
    if (h_lo > 0.0 && value <= 0.0) {
      hi = eps;
      break;
    }
    lo = eps;
    h_lo = value;
  }
  if (hi == 0.0) {
    throw ConvergenceError(
        "no crossing with the optimal noise for epsilon in [1e-3, 1e4]");
  }
  for (std::int64_t n = 0; hi - lo > tol; ++n) {
    if (n >= kMaxBisectionIterations) {
      throw ConvergenceError("failure threshold bisection did not converge");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool AchievesDp(const NoiseScale& noise, const PrivacyBudget& budget,
                const Sensitivity& sens) {
  if (sens.l2() == 0.0) return true;
  return DpDeltaProfile(noise.sigma, budget.epsilon(), sens) <= budget.delta();
}

bool AchievesPdp(const NoiseScale& noise, const PrivacyBudget& budget,
                 const Sensitivity& sens) {
  if (sens.l2() == 0.0) return true;
  return PdpDeltaProfile(noise.sigma, budget.epsilon(), sens) <=
         budget.delta();
}

}  // namespace gaussdp
