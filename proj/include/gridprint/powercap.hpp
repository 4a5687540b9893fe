// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gridprint/meter.hpp"

namespace gridprint {

inline const std::filesystem::path kPowercapRoot = "/sys/class/powercap/intel-rapl";

struct PackageDomain {
  std::string id;  // "pkg-<N>"
  std::filesystem::path directory;
  std::uint64_t max_range_uj = 0;
};

/// Top-level `intel-rapl:<N>` zones whose name starts with "package-", ordered
/// by N. Sub-zones (core, uncore, dram) are skipped.
/// Throws NoPowercapInterface if there are none, ReadFailure on unreadable files.
std::vector<PackageDomain> enumerate_package_domains(
    const std::filesystem::path& root = kPowercapRoot);

/// Throws ReadFailure carrying the energy_uj path.
EnergyCounterReading read_counter(const PackageDomain& domain, Seconds timestamp);

/// Parses a sysfs decimal counter ("123456\n"); nullopt if malformed.
std::optional<std::uint64_t> parse_counter(std::string_view text);

class PowercapMeter final : public Meter {
 public:
  explicit PowercapMeter(const std::filesystem::path& root = kPowercapRoot);

  std::vector<std::string> domains() const override;
  std::optional<std::vector<EnergyCounterReading>> poll() override;
  void wait(Seconds interval) override;
  Seconds elapsed() const override;

 private:
  std::vector<PackageDomain> domains_;
  std::chrono::steady_clock::time_point origin_;
};

}  // namespace gridprint
