// Copyright 2026 The minimax_dsac Authors.
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

#include "minimax_dsac/csv.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace minimax_dsac {

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::string_view header)
    : path_(path), out_(path) {
  if (!out_) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  WriteLine(std::string(header));
}

void CsvWriter::Append(std::string& line, double value, bool first) {
  if (!first) line += ',';
  line += FormatDouble(value);
}

void CsvWriter::Append(std::string& line, long value, bool first) {
  if (!first) line += ',';
  line += std::to_string(value);
}

void CsvWriter::Append(std::string& line, const std::string& value, bool first) {
  if (!first) line += ',';
  line += value;
}

void CsvWriter::WriteLine(const std::string& line) {
  out_ << line << '\n';
  if (!out_) throw std::runtime_error("write to '" + path_.string() + "' failed");
}

namespace {

std::vector<std::string> SplitLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::runtime_error("csv column '" + std::string(name) + "' not found");
}

std::vector<double> CsvTable::NumericColumn(std::string_view name) const {
  const std::size_t c = column(name);
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& row : rows) {
    if (c >= row.size()) throw std::runtime_error("short csv row");
    values.push_back(std::stod(row[c]));
  }
  return values;
}

CsvTable ReadCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("'" + path.string() + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  table.header = SplitLine(line);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    table.rows.push_back(SplitLine(line));
  }
  return table;
}

}  // namespace minimax_dsac
