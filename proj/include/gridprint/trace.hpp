// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gridprint/meter.hpp"

namespace gridprint {

/// Replays a recorded counter trace in virtual time.
///
/// Trace files are CSV lines `timestamp_s,domain_id,energy_uj,max_range_uj`.
/// A header line with those names and `#` comments are allowed. Rows sharing a
/// timestamp form one instant; every instant must list the same domains.
///
/// poll() returns the latest instant at or before the virtual clock (counters
/// hold their value between rows) and nullopt once the clock has moved past
/// the final row.
class TraceMeter final : public Meter {
 public:
  /// Throws SchemaError on malformed rows or non-increasing timestamps.
  static TraceMeter parse(std::string_view csv);
  static TraceMeter load(const std::filesystem::path& path);

  std::vector<std::string> domains() const override;
  std::optional<std::vector<EnergyCounterReading>> poll() override;
  void wait(Seconds interval) override;
  Seconds elapsed() const override;
  bool replays() const override { return true; }

  std::size_t instant_count() const { return instants_.size(); }

 private:
  explicit TraceMeter(std::vector<std::vector<EnergyCounterReading>> instants);

  std::vector<std::vector<EnergyCounterReading>> instants_;
  Seconds origin_{0.0};
  Seconds now_{0.0};
};

/// Renders readings back into trace CSV (no header).
std::string format_trace(const std::vector<EnergyCounterReading>& rows);

}  // namespace gridprint
