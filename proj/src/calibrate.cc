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

#include "gaussdp/calibrate.h"

#include <limits>

#include "gaussdp/relations.h"
#include "gaussdp/specfun.h"

namespace gaussdp {
namespace {

CalibrationResult ClosedForm(NoiseScale noise, double root) {
  CalibrationResult result;
  result.noise = noise;
  result.root = root;
  result.bracket_low = root;
  result.bracket_high = root;
  result.residual = std::numeric_limits<double>::quiet_NaN();
  return result;
}

}  // namespace

CalibrationResult Calibrate(Mechanism kind, const PrivacyBudget& budget,
                            const Sensitivity& sens, double tol) {
  constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
  switch (kind) {
    case Mechanism::kDwork2006:
      return ClosedForm(SigmaDwork2006(budget, sens), kNan);
    case Mechanism::kDwork2014:
      return ClosedForm(SigmaDwork2014(budget, sens), kNan);
    case Mechanism::kDpOpt:
      return SolveDpOpt(budget, sens, tol);
    case Mechanism::kMech1:
      return ClosedForm(SigmaMech1(budget, sens),
                        Mech1Root(budget.epsilon(), budget.delta()));
    case Mechanism::kMech2:
      return ClosedForm(SigmaMech2(budget, sens), Mech2Root(budget.delta()));
    case Mechanism::kPdpOpt:
      return SolvePdpOpt(budget, sens, tol);
    case Mechanism::kMech3:
      return ClosedForm(SigmaMech3(budget, sens),
                        specfun::InverseErfc(budget.delta()));
    case Mechanism::kMech4:
      return ClosedForm(SigmaMech4(budget, sens), Mech4Root(budget.delta()));
    case Mechanism::kCdpRoute:
      return ClosedForm(SigmaViaCdpRoute(budget, sens), kNan);
  }
  return ClosedForm({kNan, kind}, kNan);
}

}  // namespace gaussdp
