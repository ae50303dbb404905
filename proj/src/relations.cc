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

#include "gaussdp/relations.h"

#include <cmath>
#include <numbers>
#include <string>

#include "gaussdp/errors.h"

namespace gaussdp {

PrivacyBudget DpToPdp(const PrivacyBudget& budget, double eps_star) {
  if (!(eps_star > budget.epsilon()) || !std::isfinite(eps_star)) {
    throw DomainError("eps* must exceed epsilon = " +
                      std::to_string(budget.epsilon()));
  }
  const double factor = (1.0 + std::exp(-eps_star)) /
                        -std::expm1(budget.epsilon() - eps_star);
  const double delta = budget.delta() * factor;
  if (!(delta < 1.0)) {
    throw RangeError("converted pDP delta " + std::to_string(delta) +
                     " is not below 1");
  }
  return PrivacyBudget(eps_star, delta);
}

PrivacyBudget PdpToDp(const PrivacyBudget& budget) { return budget; }

double McdpToPdpDelta(const McdpParams& params, double epsilon) {
  if (!(params.tau > 0.0)) throw DomainError("mCDP tau must be positive");
  if (!(params.mu >= 0.0)) throw DomainError("mCDP mu must be nonnegative");
  if (!(epsilon > params.mu)) {
    throw DomainError("epsilon must exceed mu = " + std::to_string(params.mu));
  }
  const double two_tau2 = 2.0 * params.tau * params.tau;
  const double below = epsilon - params.mu;
  const double above = epsilon + params.mu;
  return std::exp(-below * below / two_tau2) +
         std::exp(-above * above / two_tau2);
}

NoiseScale SigmaViaCdpRoute(const PrivacyBudget& budget,
                            const Sensitivity& sens) {
  const double log_inv_delta = -std::log(budget.delta());
  const double eps = budget.epsilon();
  const double numerator =
      std::sqrt(log_inv_delta) + std::sqrt(log_inv_delta + eps);
  return {sens.l2() * numerator / (std::numbers::sqrt2 * eps),
          Mechanism::kCdpRoute};
}

ZcdpParams ZcdpOfSigma(const NoiseScale& sigma, const Sensitivity& sens) {
  if (!(sigma.sigma > 0.0)) {
    throw DomainError("zCDP needs a positive sigma, got " +
                      std::to_string(sigma.sigma));
  }
  return {sens.l2() * sens.l2() / (2.0 * sigma.sigma * sigma.sigma)};
}

double ZcdpToDpEpsilon(const ZcdpParams& params, double delta) {
  if (!(params.rho > 0.0)) throw DomainError("zCDP rho must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1)");
  }
  return params.rho + 2.0 * std::sqrt(params.rho * -std::log(delta));
}

}  // namespace gaussdp
