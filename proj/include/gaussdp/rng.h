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

// Deterministic random streams.
//
// Algorithm (fixed; changing any step changes every seeded result):
//   1. A stream seed is SplitMix64 applied twice: s1 = splitmix(seed),
//      s2 = splitmix(s1 ^ (stream * 0x9E3779B97F4A7C15)).
//   2. The engine is std::mt19937_64 seeded with s2 (the engine's output
//      sequence is fixed by the C++ standard).
//   3. A uniform in [0, 1) is the top 53 bits of one engine output times
//      2^-53.
//   4. Gaussians come from the Marsaglia polar form of Box-Muller on
//      uniforms mapped to [-1, 1); both values of each accepted pair are used.

#ifndef GAUSSDP_RNG_H_
#define GAUSSDP_RNG_H_

#include <cstdint>
#include <random>

namespace gaussdp {

std::uint64_t SplitMix64(std::uint64_t x);

// Seed of substream `stream` under the master `seed`.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);

  double Uniform();         // [0, 1)
  double StandardNormal();  // N(0, 1)

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gaussdp

#endif  // GAUSSDP_RNG_H_
