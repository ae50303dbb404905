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

#include "gaussdp/cli/output.h"

#include <charconv>
#include <cmath>
#include <system_error>

#include "json.hpp"

namespace gaussdp::cli {
namespace {

bool IsNull(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return true;
  if (const double* d = std::get_if<double>(&v)) return !std::isfinite(*d);
  return false;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string Render(const Value& v, Format format) {
  if (IsNull(v)) return format == Format::kJson ? "null" : "";
  if (const double* d = std::get_if<double>(&v)) return FormatDouble(*d);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  const std::string& s = std::get<std::string>(v);
  return format == Format::kJson ? nlohmann::json(s).dump() : CsvField(s);
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

void WriteTable(std::ostream& out, const Table& table, Format format) {
  if (format == Format::kCsv) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      out << (j ? "," : "") << CsvField(table.columns[j]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out << (j ? "," : "") << Render(row[j], format);
      }
      out << '\n';
    }
    return;
  }
  for (const auto& row : table.rows) {
    out << '{';
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? "," : "") << nlohmann::json(table.columns[j]).dump() << ':'
          << Render(row[j], format);
    }
    out << "}\n";
  }
}

}  // namespace gaussdp::cli
