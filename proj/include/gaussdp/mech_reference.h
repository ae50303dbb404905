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

// Single-threaded versions of the sampling kernels in mech.h. They walk the
// same chunks in order and must agree with the parallel kernels bit for bit;
// the tests and the benchmark compare the two.

#ifndef GAUSSDP_MECH_REFERENCE_H_
#define GAUSSDP_MECH_REFERENCE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "gaussdp/mech.h"

namespace gaussdp::reference {

NoisySample SampleNoise(std::int64_t dim, double sigma, std::uint64_t seed);

LossTailCounts CountLossTails(double distance, double sigma, double epsilon,
                              std::int64_t n_samples, std::uint64_t seed);

std::vector<double> MeanTrialErrors(const QueryAnswer& answer, double sigma,
                                    std::int64_t trials, std::uint64_t seed);

std::vector<double> HistogramTrialErrors(std::span<const double> counts,
                                         double sigma, std::int64_t trials,
                                         std::uint64_t seed);

}  // namespace gaussdp::reference

#endif  // GAUSSDP_MECH_REFERENCE_H_
