// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "gridprint/error.hpp"

namespace gridprint::text {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string shortest(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::vector<CsvRow> read_csv(std::string_view csv, std::string_view header) {
  std::vector<CsvRow> rows;
  bool seen_header = false;
  std::size_t line_no = 0;
  for (std::string_view line : split(csv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!seen_header) {
      // Tolerate a UTF-8 byte order mark.
      if (line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
      if (trim(line) != header) {
        throw SchemaError(line_no, "header", "expected '" + std::string(header) + "'");
      }
      seen_header = true;
      continue;
    }
    if (trim(line).empty()) continue;
    CsvRow row{line_no, split(line, ',')};
    const auto expected = split(header, ',').size();
    if (row.cells.size() != expected) {
      throw SchemaError(line_no, "*",
                        "expected " + std::to_string(expected) + " cells, found " +
                            std::to_string(row.cells.size()));
    }
    for (auto& cell : row.cells) cell = trim(cell);
    rows.push_back(std::move(row));
  }
  if (!seen_header) throw SchemaError(1, "header", "empty input");
  return rows;
}

double number_cell(const CsvRow& row, std::size_t index, std::string_view column) {
  auto v = to_double(row.cells.at(index));
  if (!v) {
    throw SchemaError(row.line, std::string(column),
                      "not a number: '" + std::string(row.cells[index]) + "'");
  }
  return *v;
}

std::optional<double> optional_number_cell(const CsvRow& row, std::size_t index,
                                           std::string_view column) {
  if (row.cells.at(index).empty()) return std::nullopt;
  return number_cell(row, index, column);
}

}  // namespace gridprint::text
