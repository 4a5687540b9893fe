// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridprint/emissions.hpp"
#include "gridprint/grid_data.hpp"
#include "gridprint/locate.hpp"
#include "gridprint/meter.hpp"

namespace gridprint {

inline constexpr const char* kReportSchemaVersion = "1";

/// What was measured: the command and its arguments.
struct ReportHeader {
  std::string command;
  std::vector<std::string> arguments;

  bool operator==(const ReportHeader&) const = default;
};

struct ReportDocument {
  std::string schema_version = kReportSchemaVersion;
  std::string tool_version;
  std::string started_at;   // ISO-8601 UTC
  std::string finished_at;  // ISO-8601 UTC

  ReportHeader header;
  MeasurementSummary readings;
  std::string mix_region_name;
  EnergyMix mix;
  double kwh = 0.0;  // PSU-adjusted
  double intensity_kg_per_kwh = 0.0;
  double kg_co2 = 0.0;
  FuelIntensities assumptions;
  EquivalencyFactors factors;
  Equivalents equivalents;
  std::array<ComparisonSet, 3> comparisons;
  LocationResolution resolution;

  /// Exit status of the measured command, when there was one.
  std::optional<int> exit_status;
  /// The run was cut short by a signal; the readings cover the part that ran.
  bool interrupted = false;
  std::vector<std::string> warnings;

  bool operator==(const ReportDocument&) const = default;
};

/// Timestamps are taken as given so documents stay reproducible.
ReportDocument build_report(const ReportHeader& header, const MeasurementSummary& summary,
                            const LocationResolution& resolution, const DatasetSnapshot& snapshot,
                            const EquivalencyFactors& factors, std::string started_at,
                            std::string finished_at);

/// "2026-10-16T09:30:00Z".
std::string iso_utc(std::chrono::system_clock::time_point t);

/// H:MM:SS, seconds rounded to the nearest whole second.
std::string format_duration(double seconds);

std::string render_text(const ReportDocument& doc);

/// Keys sorted, numbers at full round-trip precision.
std::string render_json(const ReportDocument& doc);
/// Throws SchemaError on malformed input or an unsupported schema_version.
ReportDocument parse_report_json(std::string_view json);

/// Self-contained HTML5 with one pie chart and three bar charts as inline SVG.
std::string render_html(const ReportDocument& doc);

}  // namespace gridprint
