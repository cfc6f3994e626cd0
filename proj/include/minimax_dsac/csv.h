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

#ifndef MINIMAX_DSAC_CSV_H_
#define MINIMAX_DSAC_CSV_H_

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace minimax_dsac {

// Minimal comma-separated writer; numbers are written round-trippably.
class CsvWriter {
 public:
  // Throws std::runtime_error when the file cannot be opened.
  CsvWriter(const std::filesystem::path& path, std::string_view header);

  template <typename... Cells>
  void Row(const Cells&... cells) {
    std::string line;
    bool first = true;
    ((Append(line, cells, first), first = false), ...);
    WriteLine(line);
  }

 private:
  static void Append(std::string& line, double value, bool first);
  static void Append(std::string& line, long value, bool first);
  static void Append(std::string& line, int value, bool first) {
    Append(line, static_cast<long>(value), first);
  }
  static void Append(std::string& line, std::size_t value, bool first) {
    Append(line, static_cast<long>(value), first);
  }
  static void Append(std::string& line, const std::string& value, bool first);
  static void Append(std::string& line, const char* value, bool first) {
    Append(line, std::string(value), first);
  }
  void WriteLine(const std::string& line);

  std::filesystem::path path_;
  std::ofstream out_;
};

std::string FormatDouble(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a named column; throws std::runtime_error if absent.
  std::size_t column(std::string_view name) const;
  std::vector<double> NumericColumn(std::string_view name) const;
};

CsvTable ReadCsv(const std::filesystem::path& path);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_CSV_H_
