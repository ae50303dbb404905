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

#include "gaussdp/specfun.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gaussdp/errors.h"

namespace gaussdp::specfun {
namespace {

#include "erfcx_table.inc"

constexpr double kTableUpper = kErfcxPieces * kErfcxPieceWidth;
constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;
constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;
constexpr double kHalfSqrtPi = 0.5 / std::numbers::inv_sqrtpi;

// exp(s * x^2) with x^2 split exactly into hi + lo, so the rounding of x*x
// does not get amplified by the exponential. s is +1 or -1.
double ExpSquare(double x, double s) {
  const double hi = x * x;
  const double lo = std::fma(x, x, -hi);
  return std::exp(s * hi) * (1.0 + s * lo);
}

double ErfcxTable(double x) {
  int piece = static_cast<int>(x / kErfcxPieceWidth);
  if (piece >= kErfcxPieces) piece = kErfcxPieces - 1;
  const double* c = kErfcxCoefficients[piece];
  // Affine map of the piece onto [-1, 1].
  const double t = (2.0 * x) / kErfcxPieceWidth - (2.0 * piece + 1.0);
  double b1 = 0.0;
  double b2 = 0.0;
  for (int k = kErfcxDegree; k >= 1; --k) {
    const double b0 = c[k] + 2.0 * t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + t * b1 - b2;
}

// erfcx(x) ~ 1/(x sqrt(pi)) * sum_n (-1)^n (2n-1)!! / (2x^2)^n, x >= 12.
double ErfcxAsymptotic(double x) {
  const double inv_two_x2 = 0.5 / (x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 40; ++n) {
    term *= -(2.0 * n - 1.0) * inv_two_x2;
    sum += term;
    if (std::abs(term) < 1e-17) break;
  }
  return kInvSqrtPi * sum / x;
}

// Nonnegative branch of erfc.
double ErfcNonnegative(double x) {
  // erfc(27.3) is below the smallest subnormal.
  if (x > 27.3) return 0.0;
  return Erfcx(x) * ExpSquare(x, -1.0);
}

// Maclaurin series of erf, used for |x| < 0.5.
double ErfSeries(double x) {
  const double x2 = x * x;
  double power = x;  // (-1)^n x^(2n+1) / n!
  double sum = x;
  for (int n = 1; n < 30; ++n) {
    power *= -x2 / n;
    const double term = power / (2.0 * n + 1.0);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

}  // namespace

double Erfcx(double x) {
  if (std::isnan(x)) return x;
  if (x < kErfcxMinArgument) {
    throw OverflowError("erfcx(" + std::to_string(x) +
                        ") overflows double precision");
  }
  if (x == 0.0) return 1.0;
  if (x < 0.0) return 2.0 * ExpSquare(x, 1.0) - Erfcx(-x);
  if (x < kTableUpper) return ErfcxTable(x);
  if (std::isinf(x)) return 0.0;
  return ErfcxAsymptotic(x);
}

double Erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return 2.0 - ErfcNonnegative(-x);
  return ErfcNonnegative(x);
}

double Erf(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  const double value = ax < 0.5 ? ErfSeries(ax) : 1.0 - ErfcNonnegative(ax);
  return std::copysign(value, x);
}

double InverseErfcSeed(double y) {
  if (!(y > 0.0 && y < 1.0)) {
    throw DomainError("inverfc seed requires 0 < y < 1, got " +
                      std::to_string(y));
  }
  // 2 / (sqrt(8y + 1) - 1) == (sqrt(8y + 1) + 1) / (4y), without the
  // cancellation for small y.
  const double r = std::sqrt(8.0 * y + 1.0);
  return std::sqrt(std::log((r + 1.0) / 4.0) - std::log(y));
}

double InverseErfc(double p) {
  if (!(p > 0.0 && p < 2.0)) {
    throw DomainError("inverfc requires 0 < p < 2, got " + std::to_string(p));
  }
  if (p == 1.0) return 0.0;
  // 2 - p is exact for p in [1, 2).
  if (p > 1.0) return -InverseErfc(2.0 - p);

  double lo = 0.0;
  double hi = InverseErfcSeed(p);
  double x = hi;
  for (int iter = 0; iter < 100; ++iter) {
    // Newton step on erfc(x) - p, scaled by exp(x^2) to stay in range.
    double scaled_p = p * ExpSquare(x, 1.0);
    if (std::isinf(scaled_p)) scaled_p = std::exp(std::log(p) + x * x);
    const double step = kHalfSqrtPi * (Erfcx(x) - scaled_p);
    if (step > 0.0) {
      lo = x;
    } else if (step < 0.0) {
      hi = x;
    } else {
      return x;
    }
    double next = x + step;
    if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 2.0 * std::numeric_limits<double>::epsilon() * x)
      return next;
    x = next;
  }
  return x;
}

double InverseErf(double p) {
  if (!(p > -1.0 && p < 1.0)) {
    throw DomainError("inverf requires -1 < p < 1, got " + std::to_string(p));
  }
  if (p == 0.0) return p;
  const double ap = std::abs(p);
  if (ap > 0.5) return std::copysign(InverseErfc(1.0 - ap), p);

  // erf is concave on [0, inf), so the linear seed lies left of the root and
  // Newton increases monotonically towards it.
  double x = ap * kHalfSqrtPi;
  for (int iter = 0; iter < 50; ++iter) {
    const double step =
        (ap - Erf(x)) * kHalfSqrtPi * ExpSquare(x, 1.0);
    x += step;
    if (std::abs(step) <= std::numeric_limits<double>::epsilon() * x) break;
  }
  return std::copysign(x, p);
}

}  // namespace gaussdp::specfun
