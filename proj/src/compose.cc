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

#include "gaussdp/compose.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "gaussdp/calib.h"
#include "gaussdp/errors.h"

namespace gaussdp {

double EffectiveUnitSigma(std::span<const CompositionTerm> terms) {
  if (terms.empty()) throw DomainError("composition needs at least one term");
  // Per-term noise in sensitivity units, sigma_i / Delta_i.
  std::vector<double> scales;
  scales.reserve(terms.size());
  for (const CompositionTerm& term : terms) {
    if (!(term.sigma > 0.0) || !std::isfinite(term.sigma)) {
      throw DomainError("composition term sigma must be positive");
    }
    if (term.sensitivity.l2() > 0.0) {
      scales.push_back(term.sigma / term.sensitivity.l2());
    }
  }
  if (scales.empty()) {
    throw DomainError("composition needs a term with positive sensitivity");
  }
  // Sorted descending so the small contributions are summed first. Scaling
  // by the smallest makes m equal terms give exactly s / sqrt(m).
  std::sort(scales.begin(), scales.end(), std::greater<>());
  const double smallest = scales.back();
  double sum = 0.0;
  for (double s : scales) {
    const double r = smallest / s;
    sum += r * r;
  }
  return smallest / std::sqrt(sum);
}

double ComposedDpDelta(std::span<const CompositionTerm> terms,
                       double epsilon) {
  return DpDeltaProfile(EffectiveUnitSigma(terms), epsilon, Sensitivity(1.0));
}

double ComposedPdpDelta(std::span<const CompositionTerm> terms,
                        double epsilon) {
  return PdpDeltaProfile(EffectiveUnitSigma(terms), epsilon, Sensitivity(1.0));
}

}  // namespace gaussdp
