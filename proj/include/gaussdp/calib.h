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

// Gaussian noise calibrations for (epsilon, delta)-DP and (epsilon, delta)-pDP.
//
// Every calibration has the shape
//
//   sigma = (u + sqrt(u^2 + epsilon)) * l2 / (epsilon * sqrt(2))
//
// for an auxiliary value u that depends only on (epsilon, delta): the root a
// of the DP-OPT equation, the root d of the pDP-OPT equation, or one of the
// closed-form upper bounds b, c (DP) and f, g (pDP) on those roots.
//
// Products e^eps * erfc(sqrt(u^2 + eps)) are always evaluated as
// erfcx(sqrt(u^2 + eps)) * exp(-u^2), which stays finite for any epsilon.

#ifndef GAUSSDP_CALIB_H_
#define GAUSSDP_CALIB_H_

#include <cstdint>

#include "gaussdp/types.h"

namespace gaussdp {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::int64_t kMaxBisectionIterations = 200;

// (u + sqrt(u^2 + epsilon)) * l2 / (epsilon * sqrt(2)), rewritten as
// epsilon / (sqrt(u^2 + epsilon) - u) for negative u.
double SigmaFromRoot(double root, double epsilon, double l2);

// Classical calibrations. Only proven for epsilon <= 1; above that they can
// fail to give (epsilon, delta)-DP at all (see FailureThreshold).
NoiseScale SigmaDwork2006(const PrivacyBudget& budget, const Sensitivity& sens);
NoiseScale SigmaDwork2014(const PrivacyBudget& budget, const Sensitivity& sens);

// F(delta) such that the classical sigma is F(delta) * l2 / epsilon.
double Dwork2006Multiplier(double delta);
double Dwork2014Multiplier(double delta);

// Smallest delta for which N(0, sigma^2) noise gives (epsilon, delta)-DP:
//   1/2 erfc(a) - e^eps / 2 erfc(sqrt(a^2 + eps)),
//   a = (eps sigma^2 / l2 - l2 / 2) / (sigma sqrt(2)).
// Strictly decreasing in sigma. Requires sigma > 0 and l2 > 0.
double DpDeltaProfile(double sigma, double epsilon, const Sensitivity& sens);

// Smallest delta for which sigma gives (epsilon, delta)-pDP, i.e. the
// probability that the privacy loss leaves [-eps, eps]:
//   1/2 [erfc(l) + erfc(sqrt(l^2 + eps))],  l as a above.
double PdpDeltaProfile(double sigma, double epsilon, const Sensitivity& sens);

// erfc(u) - e^eps erfc(sqrt(u^2 + eps)) - 2 delta. Strictly decreasing in u.
double DpOptResidual(double u, double epsilon, double delta);

// erfc(u) + erfc(sqrt(u^2 + eps)) - 2 delta. Strictly decreasing in u.
double PdpOptResidual(double u, double epsilon, double delta);

// Optimal DP calibration. Bisection on DpOptResidual, bracketed by
//   (0, b]  when 1 - e^eps erfc(sqrt(eps)) > 2 delta,
//   [-inverfc((2 - 2 delta) / (e^eps + 1)), 0)  when it is < 2 delta,
// and a = 0 on equality. Stops once the bracket is narrower than `tol` and
// returns its upper end, so sigma errs towards more noise. Throws
// ConvergenceError past kMaxBisectionIterations.
CalibrationResult SolveDpOpt(const PrivacyBudget& budget,
                             const Sensitivity& sens,
                             double tol = kDefaultTolerance);

// Mechanism 1: u = b, the closed-form upper bound on a. Zero when
// 2 - e^eps erfc(sqrt(eps)) <= 2 delta.
double Mech1Root(double epsilon, double delta);
NoiseScale SigmaMech1(const PrivacyBudget& budget, const Sensitivity& sens);

// Mechanism 2: u = c = sqrt(ln(2 / (sqrt(16 delta + 1) - 1))). Only defined
// for delta < 0.5; throws DomainError otherwise.
double Mech2Root(double delta);
NoiseScale SigmaMech2(const PrivacyBudget& budget, const Sensitivity& sens);

// Optimal pDP calibration: d solves PdpOptResidual(d) = 0 inside
// (inverfc(2 delta), inverfc(delta)).
CalibrationResult SolvePdpOpt(const PrivacyBudget& budget,
                              const Sensitivity& sens,
                              double tol = kDefaultTolerance);

// Mechanism 3: u = f = inverfc(delta).
NoiseScale SigmaMech3(const PrivacyBudget& budget, const Sensitivity& sens);

// Mechanism 4: u = g = sqrt(ln(2 / (sqrt(8 delta + 1) - 1))).
double Mech4Root(double delta);
NoiseScale SigmaMech4(const PrivacyBudget& budget, const Sensitivity& sens);

// l2 / (2 sqrt(2) inverf(delta)): the optimal noise for (0, delta)-DP and an
// upper bound on SolveDpOpt for every epsilon > 0.
NoiseScale DpOptZeroEpsilon(double delta, const Sensitivity& sens);

// G(delta): the epsilon above which a classical calibration
// multiplier * l2 / epsilon drops below the optimal sigma and so cannot give
// (epsilon, delta)-DP. Located by a geometric scan of [1e-3, 1e4] followed by
// bisection to width `tol`. Throws ConvergenceError if the scan finds no sign
// change.
double FailureThreshold(double multiplier, double delta, double tol = 1e-10);

// DpDeltaProfile(sigma) <= delta. Zero sensitivity always passes.
bool AchievesDp(const NoiseScale& noise, const PrivacyBudget& budget,
                const Sensitivity& sens);
bool AchievesPdp(const NoiseScale& noise, const PrivacyBudget& budget,
                 const Sensitivity& sens);

}  // namespace gaussdp

#endif  // GAUSSDP_CALIB_H_
