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

#ifndef GAUSSDP_CALIBRATE_H_
#define GAUSSDP_CALIBRATE_H_

#include "gaussdp/calib.h"
#include "gaussdp/types.h"

namespace gaussdp {

// Calibrates any mechanism tag. Closed forms report their auxiliary value
// (b, c, f or g; NaN for the classical and CDP formulas) as `root`, zero
// iterations and a NaN residual.
CalibrationResult Calibrate(Mechanism kind, const PrivacyBudget& budget,
                            const Sensitivity& sens,
                            double tol = kDefaultTolerance);

}  // namespace gaussdp

#endif  // GAUSSDP_CALIBRATE_H_
