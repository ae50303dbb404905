#!/usr/bin/env python3
# Copyright 2026 The gaussdp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates src/erfcx_table.inc: Chebyshev coefficients of erfcx on [0, 12].

The interval is cut into pieces of width 0.5; on each piece erfcx is
interpolated at the Chebyshev nodes of the first kind at 50 digits.
Usage: scripts/gen_erfcx_table.py > src/erfcx_table.inc
"""

from mpmath import mp, mpf, cos, erfc, exp, pi, nstr

mp.dps = 50

WIDTH = mpf("0.5")
UPPER = 12
DEGREE = 14


def erfcx(x):
    return exp(x * x) * erfc(x)


def chebyshev_coefficients(lo, hi, degree):
    m = degree + 1
    nodes = [cos(pi * (k + mpf(1) / 2) / m) for k in range(m)]
    values = [erfcx((hi - lo) / 2 * t + (hi + lo) / 2) for t in nodes]
    coeffs = []
    for j in range(m):
        s = sum(values[k] * cos(pi * j * (k + mpf(1) / 2) / m) for k in range(m))
        coeffs.append(2 * s / m)
    coeffs[0] /= 2
    return coeffs


def main():
    pieces = int(UPPER / WIDTH)
    print("// Generated by scripts/gen_erfcx_table.py. Do not edit.")
    print(f"constexpr int kErfcxPieces = {pieces};")
    print(f"constexpr int kErfcxDegree = {DEGREE};")
    print(f"constexpr double kErfcxPieceWidth = {nstr(WIDTH, 3)};")
    print("constexpr double kErfcxCoefficients[kErfcxPieces][kErfcxDegree + 1] = {")
    for i in range(pieces):
        lo = WIDTH * i
        coeffs = chebyshev_coefficients(lo, lo + WIDTH, DEGREE)
        body = ",\n     ".join(nstr(c, 20, min_fixed=1, max_fixed=0) for c in coeffs)
        print(f"    // [{nstr(lo, 3)}, {nstr(lo + WIDTH, 3)}]")
        print(f"    {{{body}}},")
    print("};")


if __name__ == "__main__":
    main()
