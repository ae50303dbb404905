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

// Conversions between DP, pDP and the concentrated / Renyi variants.
//
// tCDP has no operation of its own: both of its conversion branches reduce to
// the zCDP and RDP routes, which give the same Gaussian calibration as
// SigmaViaCdpRoute.

#ifndef GAUSSDP_RELATIONS_H_
#define GAUSSDP_RELATIONS_H_

#include "gaussdp/types.h"

namespace gaussdp {

// (mu, tau)-mCDP: privacy loss has mean <= mu and is tau-subgaussian.
struct McdpParams {
  double mu = 0.0;
  double tau = 1.0;
};

struct ZcdpParams {
  double rho = 0.0;
};

// (eps, delta)-DP gives (eps*, delta (1 + e^-eps*) / (1 - e^(eps - eps*)))-pDP
// for every eps* > eps. Throws DomainError for eps* <= eps and RangeError when
// the converted delta is >= 1.
PrivacyBudget DpToPdp(const PrivacyBudget& budget, double eps_star);

// (eps, delta)-pDP implies (eps, delta)-DP, so the parameters pass through.
PrivacyBudget PdpToDp(const PrivacyBudget& budget);

// exp(-(eps - mu)^2 / (2 tau^2)) + exp(-(eps + mu)^2 / (2 tau^2)).
// Requires eps > mu and tau > 0.
double McdpToPdpDelta(const McdpParams& params, double epsilon);

// l2 (sqrt(ln(1/delta)) + sqrt(ln(1/delta) + eps)) / (sqrt(2) eps): the noise
// obtained by going through rho-zCDP (equivalently RDP) and converting to
// (eps, delta)-DP.
NoiseScale SigmaViaCdpRoute(const PrivacyBudget& budget,
                            const Sensitivity& sens);

// rho = l2^2 / (2 sigma^2).
ZcdpParams ZcdpOfSigma(const NoiseScale& sigma, const Sensitivity& sens);

// rho-zCDP gives (rho + 2 sqrt(rho ln(1/delta)), delta)-DP.
double ZcdpToDpEpsilon(const ZcdpParams& params, double delta);

}  // namespace gaussdp

#endif  // GAUSSDP_RELATIONS_H_
