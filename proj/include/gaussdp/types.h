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

#ifndef GAUSSDP_TYPES_H_
#define GAUSSDP_TYPES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace gaussdp {

// An (epsilon, delta) pair with epsilon > 0 and 0 < delta < 1.
class PrivacyBudget {
 public:
  // Throws DomainError when the pair is outside the regime above.
  PrivacyBudget(double epsilon, double delta);

  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }

  friend bool operator==(const PrivacyBudget&, const PrivacyBudget&) = default;

 private:
  double epsilon_;
  double delta_;
};

// l2-sensitivity of a query: the largest l2 distance between the query's
// outputs on two neighboring datasets. Same units as the query output.
class Sensitivity {
 public:
  // Throws DomainError for negative or non-finite values.
  explicit Sensitivity(double l2);

  double l2() const { return l2_; }

 private:
  double l2_;
};

enum class Mechanism {
  kDwork2006,
  kDwork2014,
  kDpOpt,
  kMech1,
  kMech2,
  kPdpOpt,
  kMech3,
  kMech4,
  kCdpRoute,
};

// Fixed table order; every emitted table follows it.
inline constexpr std::array<Mechanism, 9> kAllMechanisms = {
    Mechanism::kDwork2006, Mechanism::kDwork2014, Mechanism::kDpOpt,
    Mechanism::kMech1,     Mechanism::kMech2,     Mechanism::kPdpOpt,
    Mechanism::kMech3,     Mechanism::kMech4,     Mechanism::kCdpRoute,
};

// Mechanisms calibrated for (epsilon, delta)-DP. The pDP calibrations also
// give DP (pDP is the stronger notion) but are not designed as DP mechanisms.
inline constexpr std::array<Mechanism, 5> kDpMechanisms = {
    Mechanism::kDwork2006, Mechanism::kDwork2014, Mechanism::kDpOpt,
    Mechanism::kMech1, Mechanism::kMech2,
};

// CLI tag, e.g. "dp-opt".
std::string_view MechanismName(Mechanism m);
std::optional<Mechanism> ParseMechanism(std::string_view name);

// True for pDP-OPT and Mechanisms 3 and 4.
bool IsPdpCalibration(Mechanism m);

// Classical calibrations proven only for epsilon <= 1.
bool IsClassical(Mechanism m);

struct NoiseScale {
  double sigma = 0.0;
  Mechanism kind = Mechanism::kDpOpt;
};

// A solved calibration with the bisection telemetry.
struct CalibrationResult {
  NoiseScale noise;
  double root = 0.0;  // a for DP-OPT, d for pDP-OPT
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  std::int64_t iterations = 0;
  double residual = 0.0;  // defining equation evaluated at root
};

}  // namespace gaussdp

#endif  // GAUSSDP_TYPES_H_
