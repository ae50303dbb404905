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

#include "gaussdp/types.h"

#include <cmath>
#include <string>

#include "gaussdp/errors.h"

namespace gaussdp {

PrivacyBudget::PrivacyBudget(double epsilon, double delta)
    : epsilon_(epsilon), delta_(delta) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive and finite, got " +
                      std::to_string(epsilon));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1), got " +
                      std::to_string(delta));
  }
}

Sensitivity::Sensitivity(double l2) : l2_(l2) {
  if (!(l2 >= 0.0) || !std::isfinite(l2)) {
    throw DomainError("l2-sensitivity must be nonnegative and finite, got " +
                      std::to_string(l2));
  }
}

std::string_view MechanismName(Mechanism m) {
  switch (m) {
    case Mechanism::kDwork2006: return "dwork2006";
    case Mechanism::kDwork2014: return "dwork2014";
    case Mechanism::kDpOpt: return "dp-opt";
    case Mechanism::kMech1: return "mech1";
    case Mechanism::kMech2: return "mech2";
    case Mechanism::kPdpOpt: return "pdp-opt";
    case Mechanism::kMech3: return "mech3";
    case Mechanism::kMech4: return "mech4";
    case Mechanism::kCdpRoute: return "cdp-route";
  }
  return "unknown";
}

std::optional<Mechanism> ParseMechanism(std::string_view name) {
  for (Mechanism m : kAllMechanisms) {
    if (MechanismName(m) == name) return m;
  }
  return std::nullopt;
}

bool IsPdpCalibration(Mechanism m) {
  return m == Mechanism::kPdpOpt || m == Mechanism::kMech3 ||
         m == Mechanism::kMech4;
}

bool IsClassical(Mechanism m) {
  return m == Mechanism::kDwork2006 || m == Mechanism::kDwork2014;
}

}  // namespace gaussdp
