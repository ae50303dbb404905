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

// Accounting for m independent Gaussian mechanisms answered non-adaptively.
// Their joint privacy equals that of one unit-sensitivity mechanism with
// sigma* = (sum_i l2_i^2 / sigma_i^2)^(-1/2).

#ifndef GAUSSDP_COMPOSE_H_
#define GAUSSDP_COMPOSE_H_

#include <span>

#include "gaussdp/types.h"

namespace gaussdp {

struct CompositionTerm {
  Sensitivity sensitivity{0.0};
  double sigma = 1.0;  // > 0
};

// Throws DomainError on an empty list, a non-positive sigma, or when every
// term has zero sensitivity. Zero-sensitivity terms contribute nothing.
// The sum is evaluated in sorted order, so the result does not depend on the
// order of `terms`.
double EffectiveUnitSigma(std::span<const CompositionTerm> terms);

double ComposedDpDelta(std::span<const CompositionTerm> terms, double epsilon);
double ComposedPdpDelta(std::span<const CompositionTerm> terms,
                        double epsilon);

}  // namespace gaussdp

#endif  // GAUSSDP_COMPOSE_H_
