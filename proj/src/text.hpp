// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

// Small text helpers shared by the CSV readers. Internal to the library.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gridprint::text {

std::string_view trim(std::string_view s);
std::string lower(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

/// Strict decimal parse of the whole (trimmed) field.
std::optional<double> to_double(std::string_view s);
std::optional<std::uint64_t> to_uint(std::string_view s);

/// Shortest representation that parses back to the same double.
std::string shortest(double value);

struct CsvRow {
  std::size_t line = 0;  // 1-based line number in the source text
  std::vector<std::string_view> cells;
};

/// Splits `csv` into rows after checking the header matches `header` exactly.
/// Blank lines are skipped and CRLF endings tolerated. Quoting is not
/// supported. Throws SchemaError (row 1) on a header mismatch and on rows with
/// the wrong number of cells.
std::vector<CsvRow> read_csv(std::string_view csv, std::string_view header);

/// Cell parsing with SchemaError reporting.
double number_cell(const CsvRow& row, std::size_t index, std::string_view column);
std::optional<double> optional_number_cell(const CsvRow& row, std::size_t index,
                                           std::string_view column);

}  // namespace gridprint::text
