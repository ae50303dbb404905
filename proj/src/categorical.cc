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

#include "gaussdp/categorical.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "gaussdp/errors.h"
#include "gaussdp/rng.h"

namespace gaussdp {
namespace {

// Reads one CSV record; false at end of input. Quoted fields may span lines.
bool ReadRecord(std::istream& in, std::int64_t& line,
                std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  ++line;
  std::string field;
  bool quoted = false;
  bool after_quote = false;
  for (;;) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) {
      if (quoted) {
        throw ParseError("line " + std::to_string(line) +
                         ": unterminated quoted field");
      }
      fields.push_back(std::move(field));
      return true;
    }
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        if (ch == '\n') ++line;
        field.push_back(ch);
      }
      continue;
    }
    if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      after_quote = false;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && in.peek() == '\n') in.get();
      fields.push_back(std::move(field));
      return true;
    } else if (ch == '"' && field.empty() && !after_quote) {
      quoted = true;
    } else if (after_quote) {
      throw ParseError("line " + std::to_string(line) +
                       ": text after closing quote");
    } else {
      field.push_back(ch);
    }
  }
}

struct Column {
  std::string_view name;
  std::vector<std::pair<std::string_view, double>> levels;  // level, weight
};

const std::array<Column, 6>& CensusColumns() {
  static const std::array<Column, 6> columns = {{
      {"age_band",
       {{"17-24", 0.15}, {"25-34", 0.22}, {"35-44", 0.22}, {"45-54", 0.18},
        {"55-64", 0.13}, {"65-74", 0.07}, {"75+", 0.03}}},
      {"workclass",
       {{"Private", 0.70}, {"Self-emp", 0.11}, {"Local-gov", 0.07},
        {"State-gov", 0.05}, {"Federal-gov", 0.07}}},
      {"education",
       {{"HS-grad", 0.33}, {"Some-college", 0.22}, {"Bachelors", 0.17},
        {"Masters", 0.06}, {"Assoc", 0.08}, {"11th-or-less", 0.14}}},
      {"marital_status",
       {{"Married", 0.47}, {"Never-married", 0.33}, {"Divorced", 0.14},
        {"Widowed", 0.06}}},
      {"sex", {{"Male", 0.67}, {"Female", 0.33}}},
      {"income", {{"<=50K", 0.76}, {">50K", 0.24}}},
  }};
  return columns;
}

std::string_view Draw(const Column& column, double u) {
  double total = 0.0;
  for (const auto& [level, weight] : column.levels) total += weight;
  double acc = 0.0;
  for (const auto& [level, weight] : column.levels) {
    acc += weight / total;
    if (u < acc) return level;
  }
  return column.levels.back().first;
}

}  // namespace

CategoricalTable ParseCategoricalCsv(std::istream& in) {
  CategoricalTable table;
  std::int64_t line = 0;
  std::vector<std::string> fields;
  if (!ReadRecord(in, line, fields)) {
    throw ParseError("CSV input is empty; a header row is required");
  }
  table.header = fields;
  while (ReadRecord(in, line, fields)) {
    // Tolerate a blank line (e.g. trailing newline pairs).
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != table.header.size()) {
      throw ParseError("line " + std::to_string(line) + ": expected " +
                       std::to_string(table.header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    table.rows.push_back(fields);
  }
  if (table.rows.empty()) throw ParseError("CSV input has no records");
  return table;
}

CategoricalTable ReadCategoricalCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open CSV file '" + path + "'");
  return ParseCategoricalCsv(in);
}

Histogram BuildHistogram(const CategoricalTable& table) {
  const std::size_t columns = table.header.size();
  std::vector<std::map<std::string, std::int64_t>> index(columns);
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < columns; ++j) index[j].emplace(row[j], 0);
  }
  Histogram histogram;
  histogram.levels.resize(columns);
  std::int64_t cells = 1;
  for (std::size_t j = 0; j < columns; ++j) {
    std::int64_t k = 0;
    for (auto& [level, id] : index[j]) {
      id = k++;
      histogram.levels[j].push_back(level);
    }
    cells *= k;
    if (cells > kMaxHistogramCells) {
      throw DomainError("histogram cross-product exceeds " +
                        std::to_string(kMaxHistogramCells) + " cells");
    }
  }
  histogram.counts.assign(cells, 0.0);
  for (const auto& row : table.rows) {
    std::int64_t cell = 0;
    for (std::size_t j = 0; j < columns; ++j) {
      cell = cell * static_cast<std::int64_t>(histogram.levels[j].size()) +
             index[j].at(row[j]);
    }
    histogram.counts[cell] += 1.0;
  }
  return histogram;
}

void WriteSyntheticCensusCsv(std::ostream& out, std::int64_t rows,
                             std::uint64_t seed) {
  const auto& columns = CensusColumns();
  for (std::size_t j = 0; j < columns.size(); ++j) {
    out << (j ? "," : "") << columns[j].name;
  }
  out << '\n';
  RandomStream stream(seed, 0);
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      out << (j ? "," : "") << Draw(columns[j], stream.Uniform());
    }
    out << '\n';
  }
}

}  // namespace gaussdp
