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

// Per-chunk and per-trial work shared by the OpenMP kernels (mech.cc) and
// the serial reference (mech_reference.cc). Only the outer loops differ.

#ifndef GAUSSDP_SRC_MECH_KERNELS_H_
#define GAUSSDP_SRC_MECH_KERNELS_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>

#include "gaussdp/mech.h"
#include "gaussdp/rng.h"

namespace gaussdp::internal {

inline std::int64_t ChunkCount(std::int64_t n) {
  return (n + kNoiseChunk - 1) / kNoiseChunk;
}

// Writes sigma * N(0, 1) into out[chunk * kNoiseChunk, ...).
inline void FillNoiseChunk(std::span<double> out, std::int64_t chunk,
                           double sigma, std::uint64_t seed) {
  const auto n = static_cast<std::int64_t>(out.size());
  const std::int64_t begin = chunk * kNoiseChunk;
  const std::int64_t end = std::min(n, begin + kNoiseChunk);
  RandomStream stream(seed, static_cast<std::uint64_t>(chunk));
  for (std::int64_t i = begin; i < end; ++i) {
    out[i] = sigma * stream.StandardNormal();
  }
}

inline LossTailCounts CountLossChunk(std::int64_t chunk, std::int64_t n,
                                     double mean, double sd, double epsilon,
                                     std::uint64_t seed) {
  const std::int64_t begin = chunk * kNoiseChunk;
  const std::int64_t end = std::min(n, begin + kNoiseChunk);
  RandomStream stream(seed, static_cast<std::uint64_t>(chunk));
  LossTailCounts counts;
  counts.samples = end - begin;
  for (std::int64_t i = begin; i < end; ++i) {
    const double loss = mean + sd * stream.StandardNormal();
    if (loss > epsilon) ++counts.above;
    if (loss < -epsilon) ++counts.below;
  }
  return counts;
}

inline std::uint64_t TrialSeed(std::uint64_t seed, std::int64_t trial) {
  return DeriveSeed(seed, static_cast<std::uint64_t>(trial) + 1);
}

// Fills `noise` with trial t's draws, chunk by chunk.
inline void FillTrialNoise(std::span<double> noise, double sigma,
                           std::uint64_t seed, std::int64_t trial) {
  const std::uint64_t trial_seed = TrialSeed(seed, trial);
  const std::int64_t chunks = ChunkCount(static_cast<std::int64_t>(noise.size()));
  for (std::int64_t c = 0; c < chunks; ++c) {
    FillNoiseChunk(noise, c, sigma, trial_seed);
  }
}

// ||(answer + noise) - answer||_2 for one trial.
inline double MeanTrialError(std::span<const double> answer, double sigma,
                             std::uint64_t seed, std::int64_t trial,
                             std::span<double> scratch) {
  FillTrialNoise(scratch, sigma, seed, trial);
  double sum = 0.0;
  for (std::size_t i = 0; i < answer.size(); ++i) {
    const double diff = (answer[i] + scratch[i]) - answer[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

// Mean over cells of ((count + noise) - count)^2 for one trial.
inline double HistogramTrialError(std::span<const double> counts, double sigma,
                                  std::uint64_t seed, std::int64_t trial,
                                  std::span<double> scratch) {
  FillTrialNoise(scratch, sigma, seed, trial);
  double sum = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double diff = (counts[i] + scratch[i]) - counts[i];
    sum += diff * diff;
  }
  return sum / static_cast<double>(counts.size());
}

}  // namespace gaussdp::internal

#endif  // GAUSSDP_SRC_MECH_KERNELS_H_
