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

// Categorical CSV records and their full cross-product histogram.

#ifndef GAUSSDP_CATEGORICAL_H_
#define GAUSSDP_CATEGORICAL_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace gaussdp {

struct CategoricalTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Header row followed by records; comma-delimited, RFC-4180 quoting
// ("a,b" and "" escapes), LF or CRLF line ends. Every field is a category.
// Throws ParseError on a missing header, a ragged record, an unterminated
// quote, or no records at all.
CategoricalTable ParseCategoricalCsv(std::istream& in);
CategoricalTable ReadCategoricalCsv(const std::string& path);

struct Histogram {
  // Observed levels per column, sorted.
  std::vector<std::vector<std::string>> levels;
  // One count per combination of levels, row-major over `levels` (the last
  // column varies fastest). Unobserved combinations are present with 0.
  std::vector<double> counts;
};

// Throws DomainError when the cross-product exceeds kMaxHistogramCells.
inline constexpr std::int64_t kMaxHistogramCells = 1 << 24;
Histogram BuildHistogram(const CategoricalTable& table);

// Census-like categorical columns (age band, work class, education, marital
// status, sex, income) with skewed marginals; deterministic in `seed`.
void WriteSyntheticCensusCsv(std::ostream& out, std::int64_t rows,
                             std::uint64_t seed);

}  // namespace gaussdp

#endif  // GAUSSDP_CATEGORICAL_H_
