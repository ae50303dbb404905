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

#include "gaussdp/mech_reference.h"

#include "mech_kernels.h"

namespace gaussdp::reference {

NoisySample SampleNoise(std::int64_t dim, double sigma, std::uint64_t seed) {
  NoisySample sample{std::vector<double>(dim, 0.0), seed, sigma};
  if (sigma == 0.0) return sample;
  const std::int64_t chunks = internal::ChunkCount(dim);
  for (std::int64_t c = 0; c < chunks; ++c) {
    internal::FillNoiseChunk(sample.values, c, sigma, seed);
  }
  return sample;
}

LossTailCounts CountLossTails(double distance, double sigma, double epsilon,
                              std::int64_t n_samples, std::uint64_t seed) {
  LossTailCounts total;
  total.samples = n_samples;
  if (distance == 0.0) return total;
  const double sd = distance / sigma;
  const double mean = 0.5 * sd * sd;
  const std::int64_t chunks = internal::ChunkCount(n_samples);
  for (std::int64_t c = 0; c < chunks; ++c) {
    const LossTailCounts part =
        internal::CountLossChunk(c, n_samples, mean, sd, epsilon, seed);
    total.above += part.above;
    total.below += part.below;
  }
  return total;
}

std::vector<double> MeanTrialErrors(const QueryAnswer& answer, double sigma,
                                    std::int64_t trials, std::uint64_t seed) {
  std::vector<double> errors(trials);
  std::vector<double> scratch(answer.values.size());
  for (std::int64_t t = 0; t < trials; ++t) {
    errors[t] =
        internal::MeanTrialError(answer.values, sigma, seed, t, scratch);
  }
  return errors;
}

std::vector<double> HistogramTrialErrors(std::span<const double> counts,
                                         double sigma, std::int64_t trials,
                                         std::uint64_t seed) {
  std::vector<double> errors(trials);
  std::vector<double> scratch(counts.size());
  for (std::int64_t t = 0; t < trials; ++t) {
    errors[t] = internal::HistogramTrialError(counts, sigma, seed, t, scratch);
  }
  return errors;
}

}  // namespace gaussdp::reference
