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

// Error-function family in double precision.
//
// The scaled complement erfcx(x) = exp(x^2) * erfc(x) is the primitive:
// piecewise Chebyshev interpolants on [0, 12] and the asymptotic series
// beyond. erfc and erf are derived from it, so erfc never loses accuracy to
// cancellation for large positive arguments. All functions are pure and
// thread-safe.

#ifndef GAUSSDP_SPECFUN_H_
#define GAUSSDP_SPECFUN_H_

namespace gaussdp::specfun {

// Below this, exp(x^2) overflows and erfcx(x) is not representable.
inline constexpr double kErfcxMinArgument = -26.6;

// Odd; relative error <= 1e-14 wherever |erf(x)| > 1e-300.
double Erf(double x);

// erfc(-x) = 2 - erfc(x). Relative error <= 1e-13 while the result is a
// normal double.
double Erfc(double x);

// exp(x^2) * erfc(x). Throws OverflowError for x < kErfcxMinArgument.
double Erfcx(double x);

// Inverse of erfc on (0, 2). Throws DomainError outside.
double InverseErfc(double p);

// Inverse of erf on (-1, 1). Throws DomainError outside.
double InverseErf(double p);

// sqrt(ln(2 / (sqrt(8y + 1) - 1))) for y in (0, 1): a strict upper bound on
// InverseErfc(y), used to seed the Newton iteration.
double InverseErfcSeed(double y);

}  // namespace gaussdp::specfun

#endif  // GAUSSDP_SPECFUN_H_
