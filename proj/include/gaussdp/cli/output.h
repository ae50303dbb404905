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

// Plot-ready tables: CSV (RFC-4180, header row) or JSON Lines (one object
// per record). Doubles are printed in the shortest decimal form that parses
// back to the same bits.

#ifndef GAUSSDP_CLI_OUTPUT_H_
#define GAUSSDP_CLI_OUTPUT_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace gaussdp::cli {

// monostate prints as an empty CSV field / JSON null.
using Value =
    std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

enum class Format { kCsv, kJson };

// Shortest round-trip decimal; at most 17 significant digits.
std::string FormatDouble(double value);

void WriteTable(std::ostream& out, const Table& table, Format format);

}  // namespace gaussdp::cli

#endif  // GAUSSDP_CLI_OUTPUT_H_
