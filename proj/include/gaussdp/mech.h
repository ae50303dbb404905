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

// Executable Gaussian mechanisms, the mean and histogram utility
// experiments, and a Monte-Carlo sampler of the privacy loss.
//
// Sampling is split into fixed chunks of kNoiseChunk draws; chunk c of a
// call seeded with `seed` reads RandomStream(seed, c). The OpenMP kernels
// here and the serial ones in mech_reference.h therefore produce identical
// bits regardless of thread count.

#ifndef GAUSSDP_MECH_H_
#define GAUSSDP_MECH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gaussdp/categorical.h"
#include "gaussdp/types.h"

namespace gaussdp {

inline constexpr std::int64_t kNoiseChunk = 4096;

struct QueryAnswer {
  std::vector<double> values;
  std::int64_t dim() const { return static_cast<std::int64_t>(values.size()); }
};

struct NoisySample {
  std::vector<double> values;
  std::uint64_t seed = 0;
  double sigma = 0.0;
};

struct ExperimentReport {
  Mechanism mechanism = Mechanism::kDpOpt;
  std::int64_t trials = 0;
  double sigma = 0.0;          // calibrated noise scale
  double metric = 0.0;         // mean l2 error (mean) or mean MSE (histogram)
  double metric_stderr = 0.0;  // standard error of `metric` over trials
  double mean_square = 0.0;    // mean of the squared per-trial error
};

// Privacy-loss tail counts over n draws of L ~ N(S^2/(2 sigma^2), S^2/sigma^2).
struct LossTailCounts {
  std::int64_t samples = 0;
  std::int64_t above = 0;  // L > eps
  std::int64_t below = 0;  // L < -eps
};

// dim i.i.d. N(0, sigma^2) draws. sigma == 0 yields zeros.
NoisySample SampleNoise(std::int64_t dim, double sigma, std::uint64_t seed);

// answer + SampleNoise(answer.dim(), sigma, seed).
NoisySample Randomize(const QueryAnswer& answer, const NoiseScale& sigma,
                      std::uint64_t seed);

// Calibrated sigma of any mechanism tag; thin wrapper over Calibrate.
double CalibratedSigma(Mechanism kind, const PrivacyBudget& budget,
                       const Sensitivity& sens);

// Synthetic mean estimation: center x0 ~ N(0, I_d), records
// x_i = x0 + U[-1/2, 1/2]^d, query Q = mean of records with l2-sensitivity
// sqrt(d)/n unless overridden. The dataset is fixed by `seed`; each trial
// draws fresh noise from its own substream, shared across mechanisms.
// Reports the mean l2 error ||Q~ - Q||.
ExperimentReport MeanExperiment(std::int64_t n, std::int64_t d,
                                const PrivacyBudget& budget, Mechanism kind,
                                std::int64_t trials, std::uint64_t seed,
                                std::optional<double> sensitivity = {});

// The mean query of the synthetic dataset used by MeanExperiment.
QueryAnswer SyntheticMeanQuery(std::int64_t n, std::int64_t d,
                               std::uint64_t seed);

// Histogram over the cross-product of observed categories with sensitivity
// 1 (add/remove neighbors). Reports the per-cell MSE averaged over trials.
ExperimentReport HistogramExperiment(const Histogram& histogram,
                                     const PrivacyBudget& budget,
                                     Mechanism kind, std::int64_t trials,
                                     std::uint64_t seed);

LossTailCounts CountLossTails(double distance, double sigma, double epsilon,
                              std::int64_t n_samples, std::uint64_t seed);

// Per-trial errors behind the experiment reports: trial t adds
// SampleNoise(dim, sigma, DeriveSeed(seed, 1 + t)) and records the l2 error
// (mean) or the per-cell mean squared error (histogram). Trials run in
// parallel; element t never depends on scheduling.
std::vector<double> MeanTrialErrors(const QueryAnswer& answer, double sigma,
                                    std::int64_t trials, std::uint64_t seed);
std::vector<double> HistogramTrialErrors(std::span<const double> counts,
                                         double sigma, std::int64_t trials,
                                         std::uint64_t seed);

// Empirical Pr[|L| > eps]: the pDP violation frequency at distance S.
double PrivacyLossSample(double distance, double sigma, double epsilon,
                         std::int64_t n_samples, std::uint64_t seed);

// Monte-Carlo estimate of Pr[L > eps] - e^eps Pr[L < -eps] with its
// standard error.
struct DpEstimate {
  double value = 0.0;
  double standard_error = 0.0;
};
DpEstimate EstimateDpDelta(const LossTailCounts& counts, double epsilon);

}  // namespace gaussdp

#endif  // GAUSSDP_MECH_H_
