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

#include "gaussdp/mech.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaussdp/calibrate.h"
#include "gaussdp/errors.h"
#include "gaussdp/rng.h"
#include "mech_kernels.h"

namespace gaussdp {
namespace {

void CheckTrials(std::int64_t trials) {
  if (trials < 1) {
    throw DomainError("trials must be >= 1, got " + std::to_string(trials));
  }
}

ExperimentReport Summarize(Mechanism kind, double sigma,
                           const std::vector<double>& errors) {
  const auto trials = static_cast<std::int64_t>(errors.size());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double e : errors) {
    sum += e;
    sum_sq += e * e;
  }
  const double mean = sum / trials;
  double var = 0.0;
  for (double e : errors) var += (e - mean) * (e - mean);
  var = trials > 1 ? var / (trials - 1) : 0.0;
  return {kind, trials, sigma, mean, std::sqrt(var / trials), sum_sq / trials};
}

}  // namespace

NoisySample SampleNoise(std::int64_t dim, double sigma, std::uint64_t seed) {
  if (dim < 1) throw DomainError("noise dimension must be >= 1");
  if (!(sigma >= 0.0)) throw DomainError("sigma must be nonnegative");
  NoisySample sample{std::vector<double>(dim, 0.0), seed, sigma};
  if (sigma == 0.0) return sample;
  const std::int64_t chunks = internal::ChunkCount(dim);
  std::span<double> out(sample.values);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    internal::FillNoiseChunk(out, c, sigma, seed);
  }
  return sample;
}

NoisySample Randomize(const QueryAnswer& answer, const NoiseScale& sigma,
                      std::uint64_t seed) {
  NoisySample sample = SampleNoise(answer.dim(), sigma.sigma, seed);
  for (std::size_t i = 0; i < sample.values.size(); ++i) {
    sample.values[i] += answer.values[i];
  }
  return sample;
}

double CalibratedSigma(Mechanism kind, const PrivacyBudget& budget,
                       const Sensitivity& sens) {
  return Calibrate(kind, budget, sens).noise.sigma;
}

QueryAnswer SyntheticMeanQuery(std::int64_t n, std::int64_t d,
                               std::uint64_t seed) {
  if (n < 1 || d < 1) throw DomainError("n and d must be >= 1");
  const std::uint64_t data_seed = DeriveSeed(seed, 0);
  RandomStream center_stream(data_seed, 0);
  RandomStream offset_stream(data_seed, 1);
  std::vector<double> center(d);
  for (double& c : center) c = center_stream.StandardNormal();
  // Records are generated and summed on the fly, record-major.
  std::vector<double> sum(d, 0.0);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      sum[j] += center[j] + (offset_stream.Uniform() - 0.5);
    }
  }
  QueryAnswer answer{std::move(sum)};
  for (double& v : answer.values) v /= static_cast<double>(n);
  return answer;
}

std::vector<double> MeanTrialErrors(const QueryAnswer& answer, double sigma,
                                    std::int64_t trials, std::uint64_t seed) {
  std::vector<double> errors(trials);
  const std::span<const double> values(answer.values);
#pragma omp parallel
  {
    std::vector<double> scratch(values.size());
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < trials; ++t) {
      errors[t] = internal::MeanTrialError(values, sigma, seed, t, scratch);
    }
  }
  return errors;
}

std::vector<double> HistogramTrialErrors(std::span<const double> counts,
                                         double sigma, std::int64_t trials,
                                         std::uint64_t seed) {
  std::vector<double> errors(trials);
#pragma omp parallel
  {
    std::vector<double> scratch(counts.size());
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < trials; ++t) {
      errors[t] = internal::HistogramTrialError(counts, sigma, seed, t, scratch);
    }
  }
  return errors;
}

ExperimentReport MeanExperiment(std::int64_t n, std::int64_t d,
                                const PrivacyBudget& budget, Mechanism kind,
                                std::int64_t trials, std::uint64_t seed,
                                std::optional<double> sensitivity) {
  CheckTrials(trials);
  const Sensitivity sens(sensitivity.value_or(
      std::sqrt(static_cast<double>(d)) / static_cast<double>(n)));
  const double sigma = CalibratedSigma(kind, budget, sens);
  const QueryAnswer answer = SyntheticMeanQuery(n, d, seed);
  return Summarize(kind, sigma, MeanTrialErrors(answer, sigma, trials, seed));
}

ExperimentReport HistogramExperiment(const Histogram& histogram,
                                     const PrivacyBudget& budget,
                                     Mechanism kind, std::int64_t trials,
                                     std::uint64_t seed) {
  CheckTrials(trials);
  if (histogram.counts.empty()) throw DomainError("histogram has no cells");
  const double sigma = CalibratedSigma(kind, budget, Sensitivity(1.0));
  return Summarize(kind, sigma,
                   HistogramTrialErrors(histogram.counts, sigma, trials, seed));
}

LossTailCounts CountLossTails(double distance, double sigma, double epsilon,
                              std::int64_t n_samples, std::uint64_t seed) {
  if (!(distance >= 0.0)) throw DomainError("distance must be nonnegative");
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  if (n_samples < 1) throw DomainError("n_samples must be >= 1");
  LossTailCounts total;
  total.samples = n_samples;
  if (distance == 0.0) return total;
  const double sd = distance / sigma;
  const double mean = 0.5 * sd * sd;
  const std::int64_t chunks = internal::ChunkCount(n_samples);
  std::int64_t above = 0;
  std::int64_t below = 0;
#pragma omp parallel for schedule(static) reduction(+ : above, below)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const LossTailCounts part =
        internal::CountLossChunk(c, n_samples, mean, sd, epsilon, seed);
    above += part.above;
    below += part.below;
  }
  total.above = above;
  total.below = below;
  return total;
}

double PrivacyLossSample(double distance, double sigma, double epsilon,
                         std::int64_t n_samples, std::uint64_t seed) {
  const LossTailCounts counts =
      CountLossTails(distance, sigma, epsilon, n_samples, seed);
  return static_cast<double>(counts.above + counts.below) /
         static_cast<double>(counts.samples);
}

DpEstimate EstimateDpDelta(const LossTailCounts& counts, double epsilon) {
  const double n = static_cast<double>(counts.samples);
  const double p_above = counts.above / n;
  const double p_below = counts.below / n;
  const double scale = std::exp(epsilon);
  // Per-draw statistic 1[L > eps] - e^eps 1[L < -eps]; the two events are
  // disjoint, so Var = p1 + e^2eps p2 - (p1 - e^eps p2)^2.
  const double value = p_above - scale * p_below;
  const double second_moment = p_above + scale * scale * p_below;
  const double var = std::max(0.0, second_moment - value * value);
  return {value, std::sqrt(var / n)};
}

}  // namespace gaussdp
